#include "dtr/invariants/boundary.hpp"

#include <numeric>

#include "dtr/errors.hpp"

namespace dtr {

Integer c1_squared(const RuledSurface& S, const FirstChern& c1) {
  // (b C - a f)^2 = -d b^2 - 2 a b
  Integer b = c1.beta;
  Integer a = c1.alpha;
  return -Integer(S.d) * b * b - 2 * a * b;
}

Rational rdelta_offset(const RuledSurface& S, int r, const FirstChern& c1) {
  return Rational(c1_squared(S, c1)) * make_rational(r - 1, 2 * r);
}

int natural_grid(const RuledSurface& S, int r, const FirstChern& c1) {
  Rational off = rdelta_offset(S, r, c1);
  return static_cast<int>(to_int64(Integer(off.get_den())));
}

FirstChern reduce_mod_rank(int r, const FirstChern& c1) {
  auto md = [r](int x) { return ((x % r) + r) % r; };
  return {md(c1.beta), md(c1.alpha)};
}

std::vector<std::vector<int>> compositions(int r) {
  std::vector<std::vector<int>> out;
  if (r == 0) return {{}};
  for (int first = 1; first <= r; ++first) {
    for (auto rest : compositions(r - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  }
  return out;
}

LaurentPoly neg_y_monomial(int e) { return LaurentPoly::monomial(e, e % 2 == 0 ? 1 : -1); }

namespace {

// Dense series with Laurent polynomial coefficients; cheaper than RatFunc
// while building the infinite products.
using LSeries = std::vector<LaurentPoly>;

// s *= (1 - x t^e)^p, e > 0 in grid units
void mul_one_minus(LSeries& s, const LaurentPoly& x, int e, int p) {
  for (int k = 0; k < p; ++k) {
    for (int i = static_cast<int>(s.size()) - 1; i >= e; --i) {
      if (!s[i - e].is_zero()) s[i] -= x * s[i - e];
    }
  }
}

// s /= (1 - x t^e)^p, e > 0 in grid units
void div_one_minus(LSeries& s, const LaurentPoly& x, int e, int p) {
  for (int k = 0; k < p; ++k) {
    for (int i = e; i < static_cast<int>(s.size()); ++i) {
      if (!s[i - e].is_zero()) s[i] += x * s[i - e];
    }
  }
}

TSeries to_tseries(const LSeries& s, const RatFunc& scale, int K, int grid) {
  TSeries out(K, grid);
  for (int i = 0; i < out.size(); ++i) {
    if (!s[i].is_zero()) out[i] = scale * RatFunc(s[i]);
  }
  return out;
}

LaurentPoly ymon(int e) { return LaurentPoly::monomial(e); }

}  // namespace

TSeries zeta_curve(int g, int a, int b, int K, int grid) {
  if (K < 0) throw InvalidInput("truncation order must be non-negative");
  if (b < 0) throw InvalidInput("zeta_curve needs a non-negative t exponent");
  if (b == 0) {
    LaurentPoly d1 = LaurentPoly::one_minus(a);
    LaurentPoly d2 = LaurentPoly::one_minus(a + 2);
    if (d1.is_zero() || d2.is_zero()) throw Pole("Z_C has a pole at this argument");
    RatFunc v(LaurentPoly::one_minus(a + 1).pow(static_cast<unsigned>(2 * g)), d1 * d2);
    return TSeries::constant(v, K, grid);
  }
  LSeries s(static_cast<std::size_t>(K) * grid + 1);
  s[0] = 1;
  int e = b * grid;
  mul_one_minus(s, ymon(a + 1), e, 2 * g);
  div_one_minus(s, ymon(a), e, 1);
  div_one_minus(s, ymon(a + 2), e, 1);
  return to_tseries(s, 1, K, grid);
}

RatFunc bun_poincare(int g, int r) {
  if (r < 1) throw InvalidInput("rank must be positive");
  RatFunc v(LaurentPoly::one_minus(1).pow(static_cast<unsigned>(2 * g)), ymon(2) - LaurentPoly(1));
  for (int i = 1; i < r; ++i) v *= zeta_curve(g, 2 * i, 0, 0)[0];
  return v;
}

TSeries boundary_series(int g, int r, int K, int grid) {
  if (r < 1) throw InvalidInput("rank must be positive");
  if (K < 0) throw InvalidInput("truncation order must be non-negative");
  const int tg = 2 * g;
  // t^0 factors of the n = 1 term form a constant prefactor
  LaurentPoly cnum = LaurentPoly::one_minus(-2 * r + 1).pow(tg);
  LaurentPoly cden = LaurentPoly::one_minus(-2 * r);
  for (int k = 1; k < r; ++k) {
    cnum = cnum * LaurentPoly::one_minus(-2 * k + 1).pow(tg);
    cden = cden * LaurentPoly::one_minus(-2 * k).pow(2);
  }
  RatFunc prefactor = RatFunc::neg_y_pow(-r * r * (1 - g)) * RatFunc(cnum, cden);

  LSeries s(static_cast<std::size_t>(K) * grid + 1);
  s[0] = 1;
  for (int n = 1; n <= K + 1; ++n) {
    // factors carrying t^(n-1); the n = 1 ones are in the prefactor
    if (n >= 2) {
      int e = (n - 1) * grid;
      mul_one_minus(s, ymon(-2 * r + 1), e, tg);
      div_one_minus(s, ymon(-2 * r), e, 1);
      for (int k = 1; k < r; ++k) {
        mul_one_minus(s, ymon(-2 * k + 1), e, tg);
        div_one_minus(s, ymon(-2 * k), e, 2);
      }
    }
    if (n <= K) {
      int e = n * grid;
      mul_one_minus(s, ymon(2 * r - 1), e, tg);
      div_one_minus(s, ymon(2 * r), e, 1);
      div_one_minus(s, LaurentPoly(1), e, 2);
      for (int k = 1; k < r; ++k) {
        mul_one_minus(s, ymon(2 * k - 1), e, tg);
        div_one_minus(s, ymon(2 * k), e, 2);
      }
    }
  }
  return to_tseries(s, prefactor, K, grid);
}

HSeries H_boundary(const RuledSurface& S, int r, const FirstChern& c1, int K) {
  HSeries h{S, r, c1, Boundary{}, TSeries(K, 1)};
  if (((c1.beta % r) + r) % r != 0) return h;
  h.series = boundary_series(S.g, r, K, 1);
  return h;
}

}  // namespace dtr
