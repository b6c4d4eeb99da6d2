#include "dtr/invariants/htoh.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <tuple>

#include "dtr/algebra/graded.hpp"
#include "dtr/errors.hpp"

namespace dtr {

namespace {

constexpr int kWorkGrid = 12;

// (r_i / r) c1 if integral
std::optional<FirstChern> proportional_class(int r, const FirstChern& c1, int ri) {
  if ((static_cast<long>(c1.beta) * ri) % r != 0 || (static_cast<long>(c1.alpha) * ri) % r != 0) return std::nullopt;
  return FirstChern{c1.beta * ri / r, c1.alpha * ri / r};
}

int work_grid(const RuledSurface& S, int r, const FirstChern& c1) { return std::lcm(kWorkGrid, natural_grid(S, r, c1)); }

TSeries on_grid(const TSeries& s, int q) {
  if (q % s.grid() != 0) throw GridMismatch("series grid does not divide the working grid");
  return s.regrid(q);
}

const HSeries& part_series(const HByRank& H, int r, const FirstChern& c1, int ri) {
  auto it = H.find(ri);
  if (it == H.end()) throw InvalidInput("missing H series for rank " + std::to_string(ri));
  auto expect = proportional_class(r, c1, ri);
  if (!expect || it->second.c1 != *expect || it->second.r != ri) {
    throw InvalidInput("H series for rank " + std::to_string(ri) + " has inconsistent slope data");
  }
  return it->second;
}

TSeries to_target(const TSeries& s, const RuledSurface& S, int r, const FirstChern& c1) {
  try {
    return s.coarsen(natural_grid(S, r, c1));
  } catch (const GridMismatch&) {
    throw InvariantViolation("h series has terms off the r Delta lattice");
  }
}

Rational self_intersection(const RuledSurface& S, const Rational& b, const Rational& a) {
  // (b C - a f)^2
  return -S.d * b * b - 2 * a * b;
}

}  // namespace

TSeries h_decomposition(const RuledSurface& S, int r, const FirstChern& c1, int K, const HByRank& H) {
  const int q = work_grid(S, r, c1);
  TSeries out(K, q);
  for (const auto& comp : compositions(r)) {
    bool ok = true;
    for (int ri : comp) ok = ok && proportional_class(r, c1, ri).has_value();
    if (!ok) continue;
    TSeries prod = on_grid(part_series(H, r, c1, comp[0]).series, q);
    for (std::size_t i = 1; i < comp.size(); ++i) prod = prod * on_grid(part_series(H, r, c1, comp[i]).series, q);
    const int l = static_cast<int>(comp.size());
    out += prod * RatFunc(make_rational(l % 2 == 1 ? 1 : -1, l));
  }
  return to_target(out, S, r, c1);
}

TSeries h_log(const RuledSurface& S, int r, const FirstChern& c1, int K, const HByRank& H) {
  const int q = work_grid(S, r, c1);
  GradedSeries f(r, K, q);
  f.set(GradedKey{}, TSeries::constant(1, K, q));
  for (int ri = 1; ri <= r; ++ri) {
    auto cls = proportional_class(r, c1, ri);
    if (!cls) continue;
    f.set(GradedKey{ri, cls->beta, cls->alpha}, on_grid(part_series(H, r, c1, ri).series, q));
  }
  return to_target(graded_log(f).at(GradedKey{r, c1.beta, c1.alpha}), S, r, c1);
}

HSeries h_from_H(const RuledSurface& S, int r, const FirstChern& c1, int K, const HByRank& H) {
  TSeries a = h_decomposition(S, r, c1, K, H);
  TSeries b = h_log(S, r, c1, K, H);
  if (a != b) throw InvariantViolation("decomposition and logarithm routes for h disagree");
  const HSeries& top = part_series(H, r, c1, r);
  return {S, r, c1, top.polarization, a};
}

std::vector<SameSlopeDecomposition> same_slope_decompositions(const RuledSurface& S, int r, const FirstChern& c1,
                                                              const Polarization& J, int K) {
  if (!std::holds_alternative<Mixed>(J) && !std::holds_alternative<AntiCanonical>(J)) {
    throw InvalidInput("same-slope decompositions need an explicit polarization J_{m,n}");
  }
  validate_polarization(S, J);
  Mixed M = std::holds_alternative<AntiCanonical>(J) ? anticanonical_as_mixed(S) : std::get<Mixed>(J);
  // J^perp is spanned by v = (m, n) in (beta, alpha) coordinates
  Integer l = lcm(Integer(M.m.get_den()), Integer(M.n.get_den()));
  Integer vm = Integer(M.m * l), vn = Integer(M.n * l);
  Integer gg = gcd(vm, vn);
  const long vb = to_int64(Integer(vm / gg));
  const long va = to_int64(Integer(vn / gg));
  const Rational v2 = self_intersection(S, vb, va);
  if (v2 >= 0) throw InvalidInput("polarization is not ample");
  // slope form gamma_1 . J ~ va beta - vb alpha
  auto form = [&](long b, long a) { return va * b - vb * a; };
  const long total = form(c1.beta, c1.alpha);

  // per-part deviation d satisfies -d^2 / 2r_i <= K, so |d_beta| <= |vb| sqrt(2 r K / |v^2|)
  long M_beta = 0;
  while (Rational(M_beta * M_beta) * (-v2) < Rational(vb * vb * 2 * r * K)) ++M_beta;
  M_beta += 1;

  struct Cand {
    FirstChern c;
    Rational shift;
  };
  auto candidates = [&](int ri) {
    std::vector<Cand> out;
    if ((total * ri) % r != 0) return out;
    long target = total * ri / r;
    Rational cb = make_rational(static_cast<long>(c1.beta) * ri, r);
    Rational ca = make_rational(static_cast<long>(c1.alpha) * ri, r);
    long centre = to_int64(floor(cb));
    for (long b = centre - M_beta; b <= centre + M_beta + 1; ++b) {
      // va b - vb a = target
      long num = va * b - target;
      if (num % vb != 0) continue;
      long a = num / vb;
      Rational sh = -self_intersection(S, Rational(b) - cb, Rational(a) - ca) / (2 * ri);
      if (sh > K) continue;
      out.push_back({{static_cast<int>(b), static_cast<int>(a)}, sh});
    }
    return out;
  };

  std::vector<SameSlopeDecomposition> result;
  for (const auto& comp : compositions(r)) {
    const std::size_t l = comp.size();
    std::vector<std::vector<Cand>> cand;
    for (std::size_t i = 0; i + 1 < l; ++i) cand.push_back(candidates(comp[i]));
    std::vector<Cand> chosen(l);
    std::function<void(std::size_t, long, long, Rational)> rec = [&](std::size_t i, long sb, long sa, Rational sh) {
      if (i + 1 == l) {
        FirstChern last{static_cast<int>(c1.beta - sb), static_cast<int>(c1.alpha - sa)};
        if (static_cast<long>(form(last.beta, last.alpha)) * r != total * comp[i]) return;
        Rational cb = make_rational(static_cast<long>(c1.beta) * comp[i], r);
        Rational ca = make_rational(static_cast<long>(c1.alpha) * comp[i], r);
        Rational s = sh - self_intersection(S, Rational(last.beta) - cb, Rational(last.alpha) - ca) / (2 * comp[i]);
        if (s > K) return;
        SameSlopeDecomposition d;
        d.ranks = comp;
        for (std::size_t j = 0; j + 1 < l; ++j) d.classes.push_back(chosen[j].c);
        d.classes.push_back(last);
        d.shift = s;
        d.proportional = s == 0;
        result.push_back(std::move(d));
        return;
      }
      for (const auto& c : cand[i]) {
        if (sh + c.shift > K) continue;
        chosen[i] = c;
        rec(i + 1, sb + c.c.beta, sa + c.c.alpha, sh + c.shift);
      }
    };
    rec(0, 0, 0, Rational(0));
  }
  return result;
}

TSeries h_nongeneric(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J, int K,
                     const HProvider& H) {
  const int q = work_grid(S, r, c1);
  std::map<std::tuple<int, int, int>, TSeries> cache;
  auto get = [&](int ri, const FirstChern& c) -> const TSeries& {
    auto key = std::make_tuple(ri, c.beta, c.alpha);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, on_grid(H(ri, c), q)).first;
    return it->second;
  };
  TSeries out(K, q);
  for (const auto& d : same_slope_decompositions(S, r, c1, J, K)) {
    Rational idx = d.shift * q;
    if (!is_integer(idx)) throw InvariantViolation("same-slope shift off the working grid");
    const int l = static_cast<int>(d.ranks.size());
    TSeries term = TSeries::term(RatFunc(make_rational(l % 2 == 1 ? 1 : -1, l)), static_cast<int>(to_int64(idx)), K, q);
    for (int i = 0; i < l; ++i) term = term * get(d.ranks[i], d.classes[i]);
    out += term;
  }
  return to_target(out, S, r, c1);
}

}  // namespace dtr
