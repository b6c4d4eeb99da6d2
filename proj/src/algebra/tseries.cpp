#include "dtr/algebra/tseries.hpp"

#include <numeric>
#include <sstream>

#include "dtr/errors.hpp"

namespace dtr {

TSeries::TSeries(int order, int grid) : order_(order), grid_(grid) {
  if (order < 0) throw InvalidInput("truncation order must be non-negative");
  if (grid < 1) throw InvalidInput("grid denominator must be positive");
  c_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(grid) + 1);
}

TSeries TSeries::constant(const RatFunc& c, int order, int grid) {
  TSeries s(order, grid);
  s.c_[0] = c;
  return s;
}

TSeries TSeries::term(const RatFunc& c, int index, int order, int grid) {
  TSeries s(order, grid);
  if (index < 0) throw InvalidInput("negative t exponent");
  if (index < s.size()) s.c_[static_cast<std::size_t>(index)] = c;
  return s;
}

RatFunc TSeries::coeff(const Rational& e) const {
  Rational scaled = e * grid_;
  if (!is_integer(scaled) || scaled < 0) return RatFunc();
  if (scaled >= size()) return RatFunc();
  return c_[static_cast<std::size_t>(to_int64(scaled))];
}

bool TSeries::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

void TSeries::check_compatible(const TSeries& o, const char* what) const {
  if (order_ != o.order_ || grid_ != o.grid_) {
    throw GridMismatch(std::string(what) + ": series with order/grid " + std::to_string(order_) + "/" +
                       std::to_string(grid_) + " vs " + std::to_string(o.order_) + "/" +
                       std::to_string(o.grid_));
  }
}

TSeries TSeries::operator-() const {
  TSeries s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  check_compatible(o, "add");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
  }
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  check_compatible(o, "sub");
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
  }
  return *this;
}

TSeries& TSeries::operator*=(const RatFunc& s) {
  for (auto& c : c_) {
    if (!c.is_zero()) c *= s;
  }
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  a.check_compatible(b, "mul");
  TSeries out(a.order_, a.grid_);
  const int n = a.size();
  for (int i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return out;
}

bool operator==(const TSeries& a, const TSeries& b) {
  a.check_compatible(b, "compare");
  return a.c_ == b.c_;
}

TSeries TSeries::inverse() const {
  if (c_[0].is_zero()) throw NonInvertible("series with zero constant term is not invertible");
  TSeries out(order_, grid_);
  RatFunc inv0 = c_[0].inverse();
  out.c_[0] = inv0;
  for (int k = 1; k < size(); ++k) {
    RatFunc acc;
    for (int j = 1; j <= k; ++j) {
      if (c_[j].is_zero() || out.c_[k - j].is_zero()) continue;
      acc += c_[j] * out.c_[k - j];
    }
    if (!acc.is_zero()) out.c_[k] = -(acc * inv0);
  }
  return out;
}

TSeries TSeries::adams(int n) const {
  if (n < 1) throw InvalidInput("Adams operation needs n >= 1");
  if (n == 1) return *this;
  TSeries out(order_, grid_);
  for (int i = 0; i * n < size(); ++i) {
    if (!c_[i].is_zero()) out.c_[static_cast<std::size_t>(i * n)] = c_[i].psi(n);
  }
  return out;
}

TSeries TSeries::regrid(int new_grid) const {
  if (new_grid % grid_ != 0) throw GridMismatch("regrid target must be a multiple of the current grid");
  int f = new_grid / grid_;
  TSeries out(order_, new_grid);
  for (int i = 0; i < size(); ++i) out.c_[static_cast<std::size_t>(i * f)] = c_[i];
  return out;
}

TSeries TSeries::coarsen(int new_grid) const {
  if (grid_ % new_grid != 0) throw GridMismatch("coarsen target must divide the current grid");
  int f = grid_ / new_grid;
  TSeries out(order_, new_grid);
  for (int i = 0; i < size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (i % f != 0) throw GridMismatch("series has terms off the coarser grid");
    out.c_[static_cast<std::size_t>(i / f)] = c_[i];
  }
  return out;
}

int TSeries::minimal_grid() const {
  int g = 0;
  for (int i = 0; i < size(); ++i) {
    if (!c_[i].is_zero()) g = std::gcd(g, i);
  }
  if (g == 0) return 1;
  return grid_ / std::gcd(g, grid_);
}

TSeries TSeries::truncated(int new_order) const {
  if (new_order > order_) throw GridMismatch("cannot extend a truncated series");
  TSeries out(new_order, grid_);
  for (int i = 0; i < out.size(); ++i) out.c_[i] = c_[i];
  return out;
}

std::string TSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "[" << c_[i].to_string() << "]";
    if (i != 0) {
      Rational e(i, grid_);
      e.canonicalize();
      os << "*t^" << e.get_str();
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << order_ << "+)";
  return os.str();
}

}  // namespace dtr
