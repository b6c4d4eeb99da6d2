#include "dtr/invariants/wallcross.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

#include "dtr/errors.hpp"
#include "dtr/invariants/boundary.hpp"

namespace dtr {

namespace {

using i64 = std::int64_t;

// mu_J(r, beta, alpha) = (p beta + q alpha) / r, compared lexicographically
// over the list (the Suitable case carries an infinitesimal second form).
struct Form {
  i64 p;
  i64 q;
};
using Forms = std::vector<Form>;

Forms slope_forms(const RuledSurface& S, const Polarization& J) {
  if (std::holds_alternative<Boundary>(J)) return {{1, 0}};
  if (std::holds_alternative<Suitable>(J)) return {{1, 0}, {0, -1}};
  Mixed m = std::holds_alternative<AntiCanonical>(J) ? anticanonical_as_mixed(S) : std::get<Mixed>(J);
  Integer l = lcm(Integer(m.m.get_den()), Integer(m.n.get_den()));
  Rational mm = m.m * l;
  Rational nn = m.n * l;
  // gamma_1 . J_{m,n} = n beta - m alpha
  return {{to_int64(nn), -to_int64(mm)}};
}

// sign of mu(r1, b1, a1) - mu(r2, b2, a2)
int compare_slopes(const Forms& F, i64 r1, i64 b1, i64 a1, i64 r2, i64 b2, i64 a2) {
  for (const auto& f : F) {
    i64 lhs = (f.p * b1 + f.q * a1) * r2;
    i64 rhs = (f.p * b2 + f.q * a2) * r1;
    if (lhs != rhs) return lhs < rhs ? -1 : 1;
  }
  return 0;
}

int sign_of(const Forms& F, const Forms& Fp, const std::vector<Part>& parts) {
  const std::size_t l = parts.size();
  i64 R = 0, Bsum = 0, Asum = 0;
  for (const auto& p : parts) {
    R += p.r;
    Bsum += p.beta;
    Asum += p.alpha;
  }
  int k = 0;
  i64 hr = 0, hb = 0, ha = 0;
  for (std::size_t i = 0; i + 1 < l; ++i) {
    hr += parts[i].r;
    hb += parts[i].beta;
    ha += parts[i].alpha;
    const Part& a = parts[i];
    const Part& b = parts[i + 1];
    int c = compare_slopes(F, a.r, a.beta, a.alpha, b.r, b.beta, b.alpha);
    int cp = compare_slopes(Fp, hr, hb, ha, R - hr, Bsum - hb, Asum - ha);
    if (c <= 0 && cp > 0) {
      ++k;
    } else if (!(c > 0 && cp <= 0)) {
      return 0;
    }
  }
  return k % 2 == 0 ? 1 : -1;
}

int mod(int x, int r) { return ((x % r) + r) % r; }

// D . K_S for D = B C - A f
i64 dot_canonical(const RuledSurface& S, i64 B, i64 A) { return B * (S.d + 2 * S.g - 2) + 2 * A; }

// y exponent -sum_{j<i} (r_j gamma_i - r_i gamma_j) . K_S
i64 y_exponent(const RuledSurface& S, const std::vector<Part>& parts) {
  i64 e = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      i64 B = static_cast<i64>(parts[j].r) * parts[i].beta - static_cast<i64>(parts[i].r) * parts[j].beta;
      i64 A = static_cast<i64>(parts[j].r) * parts[i].alpha - static_cast<i64>(parts[i].r) * parts[j].alpha;
      e -= dot_canonical(S, B, A);
    }
  }
  return e;
}

// r Delta - sum_i r_i Delta_i for the filtration with the given quotients
Rational delta_correction(const RuledSurface& S, const std::vector<Part>& parts) {
  Rational c = 0;
  i64 Rh = parts[0].r, Bh = parts[0].beta, Ah = parts[0].alpha;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const Part& p = parts[i];
    // xi = r_i Gamma_{i-1} - R_{i-1} gamma_i = B C - A f
    i64 B = p.r * Bh - Rh * p.beta;
    i64 A = p.r * Ah - Rh * p.alpha;
    i64 Rn = Rh + p.r;
    c += make_rational(S.d * B * B + 2 * A * B, 2 * p.r * Rn * Rh);
    Rh = Rn;
    Bh += p.beta;
    Ah += p.alpha;
  }
  return c;
}

// grid on which every filtration correction for rank r lives
int correction_grid(int r) {
  int q = 1;
  for (const auto& comp : compositions(r)) {
    int R = comp[0];
    for (std::size_t i = 1; i < comp.size(); ++i) {
      q = std::lcm(q, 2 * comp[i] * R * (R + comp[i]));
      R += comp[i];
    }
  }
  return q;
}

using LSeries = std::vector<LaurentPoly>;

void div_one_minus(LSeries& s, const LaurentPoly& x, int e) {
  for (int i = e; i < static_cast<int>(s.size()); ++i) {
    if (!s[i - e].is_zero()) s[i] += x * s[i - e];
  }
}

TSeries lseries_to_tseries(const LSeries& s, const RatFunc& scale, int K, int grid) {
  TSeries out(K, grid);
  for (int i = 0; i < out.size(); ++i) {
    if (!s[i].is_zero()) out[i] = scale * RatFunc(s[i]);
  }
  return out;
}

TSeries to_natural_grid(const TSeries& s, const RuledSurface& S, int r, const FirstChern& c1) {
  int q = natural_grid(S, r, c1);
  if (s.grid() % q != 0) return s.regrid(std::lcm(s.grid(), q)).coarsen(q);
  try {
    return s.coarsen(q);
  } catch (const GridMismatch&) {
    throw InvariantViolation("t exponents off the r Delta lattice for rank " + std::to_string(r));
  }
}

// all integer tuples of the given length with max |x_i| == s
template <class F>
void for_each_in_shell(int len, int s, F&& fn) {
  std::vector<int> v(static_cast<std::size_t>(len), -s);
  if (len == 0) {
    if (s == 0) fn(v);
    return;
  }
  while (true) {
    int mx = 0;
    for (int x : v) mx = std::max(mx, std::abs(x));
    if (mx == s) fn(v);
    std::size_t k = 0;
    while (k < v.size() && v[k] == s) v[k++] = -s;
    if (k == v.size()) return;
    ++v[k];
  }
}

constexpr int kMinShells = 2;
constexpr int kEmptyShellsToStop = 3;

int shell_cap(int K) { return 16 * K + 40; }

}  // namespace

int joyce_sign(const RuledSurface& S, const std::vector<Part>& parts, const Polarization& J,
               const Polarization& Jp) {
  if (parts.empty()) throw InvalidInput("S needs at least one part");
  for (const auto& p : parts) {
    if (p.r < 1) throw InvalidInput("parts need positive rank");
  }
  return sign_of(slope_forms(S, J), slope_forms(S, Jp), parts);
}

TSeries wallcross_series(const RuledSurface& S, int r, const FirstChern& c1, const Mixed& J,
                         const BoundaryData& B) {
  if (J.m <= 0 || J.n <= 0) throw InvalidInput("wall-crossing from the boundary needs m > 0 and n > 0");
  if (r < 1 || r > B.max_rank()) throw InvalidInput("rank outside the boundary data");
  const int K = B.order();
  const int q = correction_grid(r);
  const int N = K * q;
  const Rational m = J.m, n = J.n;
  TSeries out(K, q);
  const int beta = c1.beta, alpha = c1.alpha;

  for (const auto& comp : compositions(r)) {
    const int l = static_cast<int>(comp.size());
    if (l == 1) {
      if (mod(beta, r) == 0) out += B.H(r, q);
      continue;
    }
    std::vector<int> R(1, 0);
    for (int ri : comp) R.push_back(R.back() + ri);

    // kernel terms grouped by the y-only geometric factors they carry
    std::map<std::vector<int>, LSeries> kernel;
    auto eval = [&](const std::vector<int>& bs, const std::vector<i64>& T) {
      std::vector<Part> parts(static_cast<std::size_t>(l));
      for (int i = 0; i < l; ++i) {
        parts[i].r = comp[i];
        parts[i].beta = bs[i];
      }
      // T[k] = sum of a over parts k+1..l-1
      parts[0].alpha = static_cast<int>(alpha - T[0]);
      for (int k = 1; k < l; ++k) parts[k].alpha = static_cast<int>(T[k - 1] - (k < l - 1 ? T[k] : 0));
      return std::pair<i64, Rational>(y_exponent(S, parts), delta_correction(S, parts));
    };

    auto process = [&](const std::vector<int>& free_b) -> bool {
      std::vector<int> bs(static_cast<std::size_t>(l));
      int tail = 0;
      for (int i = 1; i < l; ++i) {
        bs[i] = free_b[i - 1];
        tail += bs[i];
      }
      bs[0] = beta - tail;
      for (int i = 0; i < l; ++i) {
        if (mod(bs[i], comp[i]) != 0) return false;
      }
      // each wall i restricts T[i-1] to a half-line
      std::vector<i64> T0(static_cast<std::size_t>(l - 1));
      std::vector<int> dir(static_cast<std::size_t>(l - 1));
      int coef = 1;
      for (int i = 1; i < l; ++i) {
        Rational w = make_rational(bs[i], comp[i]) - make_rational(bs[i - 1], comp[i - 1]);
        int Rh = R[i], Rt = r - R[i];
        int Bt = 0;
        for (int k = i; k < l; ++k) Bt += bs[k];
        int Bh = beta - Bt;
        // head slope <= tail slope at J_{m,n}  <=>  T <= Tstar
        Rational Tstar = (Rational(Bt) * n / Rt - (Rational(Bh) * n - Rational(alpha) * m) / Rh) /
                         (m * (make_rational(1, Rt) + make_rational(1, Rh)));
        i64 fl = to_int64(floor(Tstar));
        if (w >= 0) {
          T0[i - 1] = fl + 1;
          dir[i - 1] = 1;
          coef = -coef;
        } else {
          T0[i - 1] = fl;
          dir[i - 1] = -1;
        }
      }
      auto [e0, c0] = eval(bs, T0);
      std::vector<std::pair<i64, Rational>> steps;
      for (int i = 0; i < l - 1; ++i) {
        std::vector<i64> T1 = T0;
        T1[i] += dir[i];
        auto [e1, c1v] = eval(bs, T1);
        steps.emplace_back(e1 - e0, c1v - c0);
      }
      for (const auto& [de, dc] : steps) {
        if (dc < 0) throw NonTerminating("wall-crossing sum diverges for composition of rank " + std::to_string(r));
      }
      if (c0 > K) return false;
      if (c0 < 0) throw InvariantViolation("negative t exponent in the wall-crossing sum");
      Rational sc = c0 * q;
      if (!is_integer(sc)) throw InvariantViolation("wall-crossing term off the t grid");
      LSeries ser(static_cast<std::size_t>(N) + 1);
      ser[static_cast<std::size_t>(to_int64(sc))] = neg_y_monomial(static_cast<int>(e0)) * Rational(coef);
      std::vector<int> ygeo;
      for (const auto& [de, dc] : steps) {
        if (dc == 0) {
          if (de == 0) throw NonTerminating("wall-crossing sum has a constant direction");
          ygeo.push_back(static_cast<int>(de));
        } else {
          Rational st = dc * q;
          if (!is_integer(st)) throw InvariantViolation("wall-crossing step off the t grid");
          div_one_minus(ser, neg_y_monomial(static_cast<int>(de)), static_cast<int>(to_int64(st)));
        }
      }
      std::sort(ygeo.begin(), ygeo.end());
      auto& acc = kernel[ygeo];
      if (acc.empty()) acc.resize(static_cast<std::size_t>(N) + 1);
      for (int i = 0; i <= N; ++i) {
        if (!ser[i].is_zero()) acc[i] += ser[i];
      }
      return true;
    };

    int empty_run = 0;
    for (int s = 0;; ++s) {
      if (s > shell_cap(K)) throw NonTerminating("wall-crossing enumeration did not stabilise");
      bool any = false;
      for_each_in_shell(l - 1, s, [&](const std::vector<int>& fb) { any = process(fb) || any; });
      empty_run = any ? 0 : empty_run + 1;
      if (s >= kMinShells && empty_run >= kEmptyShellsToStop) break;
    }

    TSeries ker(K, q);
    for (const auto& [ygeo, ls] : kernel) {
      RatFunc scale = 1;
      for (int de : ygeo) scale *= RatFunc(LaurentPoly(1), LaurentPoly(1) - neg_y_monomial(de));
      ker += lseries_to_tseries(ls, scale, K, q);
    }
    if (ker.is_zero()) continue;
    TSeries prod = B.H(comp[0], q);
    for (int i = 1; i < l; ++i) prod = prod * B.H(comp[i], q);
    out += ker * prod;
  }
  return to_natural_grid(out, S, r, c1);
}

HSeries wallcross_H2(const RuledSurface& S, const FirstChern& c1, const Rational& m, const Rational& n, int K) {
  Mixed J{m, n};
  validate_polarization(S, J);
  BoundaryData B(S.g, 2, K);
  return {S, 2, c1, J, wallcross_series(S, 2, c1, J, B)};
}

HSeries wallcross_H3(const RuledSurface& S, const FirstChern& c1, const Rational& m, const Rational& n, int K) {
  Mixed J{m, n};
  validate_polarization(S, J);
  BoundaryData B(S.g, 3, K);
  return {S, 3, c1, J, wallcross_series(S, 3, c1, J, B)};
}

TSeries joyce_wallcross_general(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                                const Polarization& Jp, int K) {
  if (r < 1 || r > 3) throw InvalidInput("general wall-crossing is implemented for rank <= 3");
  validate_polarization(S, J);
  validate_polarization(S, Jp);
  BoundaryData B(S.g, r, K);
  if (std::holds_alternative<Boundary>(Jp)) return boundary_series(S.g, r, K, 1).regrid(natural_grid(S, r, c1));
  const Polarization src = std::holds_alternative<Boundary>(J) ? Polarization(Suitable{}) : J;
  if (std::holds_alternative<AntiCanonical>(src)) throw InvalidInput("anticanonical source is not generic");

  // I(gamma; src) as series in t^{r Delta}, keyed by the twist class
  std::map<std::tuple<int, int, int>, TSeries> source;
  const int q = correction_grid(r);
  auto source_series = [&](int ri, int bi, int ai) -> const TSeries& {
    FirstChern red = reduce_mod_rank(ri, {bi, ai});
    auto key = std::make_tuple(ri, red.beta, red.alpha);
    auto it = source.find(key);
    if (it != source.end()) return it->second;
    TSeries s(K, 1);
    if (std::holds_alternative<Suitable>(src)) {
      s = suitable_series(ri, red, B);
    } else {
      Mixed Jm = std::get<Mixed>(src);
      s = wallcross_series(S, ri, red, Jm, B);
    }
    s = s.regrid(q);
    return source.emplace(key, std::move(s)).first->second;
  };

  auto as_mixed = [&](const Polarization& P) {
    return std::holds_alternative<AntiCanonical>(P) ? Polarization(anticanonical_as_mixed(S)) : P;
  };
  if (as_mixed(src) == as_mixed(Jp)) {
    return to_natural_grid(source_series(r, c1.beta, c1.alpha), S, r, c1);
  }

  const Forms F = slope_forms(S, src);
  const Forms Fp = slope_forms(S, Jp);
  const bool suitable_src = std::holds_alternative<Suitable>(src);
  const int N = K * q;
  TSeries out = source_series(r, c1.beta, c1.alpha);

  for (const auto& comp : compositions(r)) {
    const int l = static_cast<int>(comp.size());
    if (l == 1) continue;
    // accumulated sum of S (-y)^e t^corr per tuple of part classes
    std::map<std::vector<int>, LSeries> acc;
    std::vector<Part> parts(static_cast<std::size_t>(l));
    auto process = [&](const std::vector<int>& fv) -> bool {
      int tb = 0, ta = 0;
      for (int i = 1; i < l; ++i) {
        parts[i] = {comp[i], fv[2 * (i - 1)], fv[2 * (i - 1) + 1]};
        tb += parts[i].beta;
        ta += parts[i].alpha;
      }
      parts[0] = {comp[0], c1.beta - tb, c1.alpha - ta};
      if (suitable_src) {
        for (const auto& p : parts) {
          if (mod(p.beta, p.r) != 0) return false;
        }
      }
      int sg = sign_of(F, Fp, parts);
      if (sg == 0) return false;
      Rational corr = delta_correction(S, parts);
      if (corr > K) return false;
      if (corr < 0) throw InvariantViolation("negative filtration correction with non-zero S");
      std::vector<int> key;
      for (const auto& p : parts) {
        FirstChern red = reduce_mod_rank(p.r, {p.beta, p.alpha});
        key.push_back(red.beta);
        key.push_back(red.alpha);
      }
      auto& ls = acc[key];
      if (ls.empty()) ls.resize(static_cast<std::size_t>(N) + 1);
      ls[static_cast<std::size_t>(to_int64(corr * q))] += neg_y_monomial(static_cast<int>(y_exponent(S, parts))) * Rational(sg);
      return true;
    };
    int empty_run = 0;
    for (int s = 0;; ++s) {
      if (s > shell_cap(K)) throw NonTerminating("Joyce enumeration did not stabilise");
      bool any = false;
      for_each_in_shell(2 * (l - 1), s, [&](const std::vector<int>& fv) { any = process(fv) || any; });
      empty_run = any ? 0 : empty_run + 1;
      if (s >= 2 * K + 4 && empty_run >= kEmptyShellsToStop) break;
    }
    for (const auto& [key, ls] : acc) {
      TSeries term = lseries_to_tseries(ls, 1, K, q);
      if (term.is_zero()) continue;
      for (int i = 0; i < l; ++i) term = term * source_series(comp[i], key[2 * i], key[2 * i + 1]);
      out += term;
    }
  }
  return to_natural_grid(out, S, r, c1);
}

}  // namespace dtr
