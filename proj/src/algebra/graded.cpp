#include "dtr/algebra/graded.hpp"

#include <sstream>

#include "dtr/errors.hpp"

namespace dtr {

int mobius(int n) {
  if (n < 1) throw InvalidInput("mobius needs n >= 1");
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

std::string to_string(const GradedKey& k) {
  return "(" + std::to_string(k.rank) + "," + std::to_string(k.beta) + "," + std::to_string(k.alpha) + ")";
}

GradedSeries::GradedSeries(int rank_bound, int order, int grid)
    : rank_bound_(rank_bound), order_(order), grid_(grid) {
  if (rank_bound < 0) throw InvalidInput("rank bound must be non-negative");
}

TSeries GradedSeries::at(const GradedKey& key) const {
  auto it = terms_.find(key);
  if (it == terms_.end()) return TSeries(order_, grid_);
  return it->second;
}

void GradedSeries::set(const GradedKey& key, const TSeries& s) {
  if (key.rank < 0 || (key.rank == 0 && !key.is_zero())) {
    throw InvalidInput("graded key " + dtr::to_string(key) + " needs rank >= 1");
  }
  if (s.order() != order_ || s.grid() != grid_) throw GridMismatch("graded coefficient with wrong grid");
  if (key.rank > rank_bound_) return;
  if (s.is_zero()) {
    terms_.erase(key);
  } else {
    terms_[key] = s;
  }
}

void GradedSeries::add_to(const GradedKey& key, const TSeries& s) {
  if (key.rank > rank_bound_) return;
  set(key, at(key) + s);
}

void GradedSeries::check_compatible(const GradedSeries& o) const {
  if (rank_bound_ != o.rank_bound_ || order_ != o.order_ || grid_ != o.grid_) {
    throw GridMismatch("graded series with different truncations");
  }
}

void GradedSeries::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
  check_compatible(o);
  for (const auto& [k, s] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, s);
    } else {
      it->second += s;
    }
  }
  prune();
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
  check_compatible(o);
  for (const auto& [k, s] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, -s);
    } else {
      it->second -= s;
    }
  }
  prune();
  return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
  a.check_compatible(b);
  GradedSeries out(a.rank_bound_, a.order_, a.grid_);
  for (const auto& [ka, sa] : a.terms_) {
    for (const auto& [kb, sb] : b.terms_) {
      GradedKey k = ka + kb;
      if (k.rank > a.rank_bound_) continue;
      auto it = out.terms_.find(k);
      if (it == out.terms_.end()) {
        out.terms_.emplace(k, sa * sb);
      } else {
        it->second += sa * sb;
      }
    }
  }
  out.prune();
  return out;
}

GradedSeries GradedSeries::scaled(const RatFunc& c) const {
  GradedSeries out = *this;
  for (auto& [k, s] : out.terms_) s *= c;
  out.prune();
  return out;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

GradedSeries GradedSeries::adams(int n) const {
  if (n < 1) throw InvalidInput("Adams operation needs n >= 1");
  GradedSeries out(rank_bound_, order_, grid_);
  for (const auto& [k, s] : terms_) {
    GradedKey nk = k.scaled(n);
    if (nk.rank > rank_bound_) continue;
    out.terms_.emplace(nk, s.adams(n));
  }
  out.prune();
  return out;
}

std::string GradedSeries::to_string() const {
  std::ostringstream os;
  for (const auto& [k, s] : terms_) os << "z^" << dtr::to_string(k) << ": " << s.to_string() << "\n";
  return os.str();
}

GradedSeries graded_exp(const GradedSeries& f) {
  if (!f.constant_term().is_zero()) throw NonInvertible("exp needs a series without constant term");
  GradedSeries result(f.rank_bound(), f.order(), f.grid());
  result.set(GradedKey{}, TSeries::constant(1, f.order(), f.grid()));
  GradedSeries term = result;
  // every key of f has rank >= 1, so f^k vanishes once k exceeds the rank bound
  for (int k = 1; k <= f.rank_bound(); ++k) {
    term = (term * f).scaled(RatFunc(Rational(1, k)));
    result += term;
  }
  return result;
}

GradedSeries graded_log(const GradedSeries& f) {
  TSeries c = f.constant_term();
  if (c != TSeries::constant(1, f.order(), f.grid())) {
    throw NonInvertible("log needs constant term 1");
  }
  GradedSeries g = f;
  g.set(GradedKey{}, TSeries(f.order(), f.grid()));
  GradedSeries result(f.rank_bound(), f.order(), f.grid());
  GradedSeries power = g;
  for (int k = 1; k <= f.rank_bound(); ++k) {
    Rational coef(k % 2 == 1 ? 1 : -1, k);
    result += power.scaled(RatFunc(coef));
    power = power * g;
  }
  return result;
}

GradedSeries plethystic_exp(const GradedSeries& f) {
  if (!f.constant_term().is_zero()) throw NonInvertible("Exp needs a series without constant term");
  GradedSeries sum(f.rank_bound(), f.order(), f.grid());
  for (int n = 1; n <= f.rank_bound(); ++n) sum += f.adams(n).scaled(RatFunc(Rational(1, n)));
  return graded_exp(sum);
}

GradedSeries plethystic_log(const GradedSeries& f, const MobiusFn& mu) {
  GradedSeries l = graded_log(f);
  GradedSeries result(f.rank_bound(), f.order(), f.grid());
  for (int n = 1; n <= f.rank_bound(); ++n) {
    int m = mu(n);
    if (m == 0) continue;
    result += l.adams(n).scaled(RatFunc(Rational(m, n)));
  }
  return result;
}

}  // namespace dtr
