#include "dtr/invariants/omega.hpp"

#include <numeric>

#include "dtr/errors.hpp"

namespace dtr {

namespace {

std::int64_t integral(const Rational& x, const char* what) {
  if (!is_integer(x)) throw InvariantViolation(std::string("fractional ") + what + ": " + x.get_str());
  return to_int64(x);
}

RatFunc y_inv_minus_y() { return RatFunc(LaurentPoly::monomial(-1) - LaurentPoly::monomial(1)); }

}  // namespace

OmegaResult extract_betti(const RuledSurface& S, const ChernCharacter& gamma, const LaurentPoly& coeff) {
  OmegaResult res;
  res.gamma = gamma;
  res.omega_poly = coeff;
  Rational dimq = 1 - euler_pairing(S, gamma, gamma);
  if (!is_integer(dimq)) throw InvariantViolation("non-integral moduli dimension for " + gamma.to_string());
  res.dim = static_cast<int>(to_int64(dimq));
  if (coeff.is_zero()) return res;
  if (res.dim < 0) throw InvariantViolation("non-zero Omega with negative expected dimension for " + gamma.to_string());
  const int dim = res.dim;
  // P(M) = (-y)^dim Omega
  LaurentPoly P = coeff * LaurentPoly::monomial(dim, dim % 2 == 0 ? 1 : -1);
  if (P.low() < 0 || P.high() > 2 * dim) {
    throw InvariantViolation("Poincare polynomial outside degrees 0.." + std::to_string(2 * dim) + " for " +
                             gamma.to_string());
  }
  res.betti.resize(static_cast<std::size_t>(2 * dim + 1));
  std::int64_t total = 0;
  for (int n = 0; n <= 2 * dim; ++n) {
    Rational c = P.coeff(n);
    if (n % 2 == 1) c = -c;
    std::int64_t b = integral(c, "Betti number");
    if (b < 0) throw InvariantViolation("negative Betti number b_" + std::to_string(n) + " for " + gamma.to_string());
    if (S.g == 0 && n % 2 == 1 && b != 0) {
      throw InvariantViolation("odd Betti number b_" + std::to_string(n) + " on a rational surface");
    }
    res.betti[static_cast<std::size_t>(n)] = b;
    total += b;
  }
  for (int n = 0; n <= 2 * dim; ++n) {
    if (res.betti[static_cast<std::size_t>(n)] != res.betti[static_cast<std::size_t>(2 * dim - n)]) {
      throw InvariantViolation("Betti numbers are not palindromic for " + gamma.to_string());
    }
  }
  if (res.betti[0] != 1) throw InvariantViolation("b_0 != 1 for " + gamma.to_string());
  if (S.g >= 1) {
    LaurentPoly Q;
    try {
      Q = exact_divide(P, LaurentPoly::one_minus(1).pow(static_cast<unsigned>(2 * S.g)));
    } catch (const NonPolynomial&) {
      throw InvariantViolation("Poincare polynomial not divisible by (1-y)^2g for " + gamma.to_string());
    }
    std::vector<std::int64_t> bp(static_cast<std::size_t>(2 * dim - 2 * S.g + 1));
    for (int n = 0; n < static_cast<int>(bp.size()); ++n) {
      Rational c = Q.coeff(n);
      if (n % 2 == 1) c = -c;
      bp[static_cast<std::size_t>(n)] = integral(c, "b' number");
    }
    res.betti_prime = std::move(bp);
  }
  res.omega = dim % 2 == 0 ? total : -total;
  return res;
}

TSeries omega_series(const RuledSurface& S, int r, const FirstChern& c1, int K, const HBarProvider& h,
                     const MobiusFn& mu) {
  const int q = natural_grid(S, r, c1);
  int gcd_all = std::gcd(r, std::gcd(std::abs(c1.beta), std::abs(c1.alpha)));
  // all divided classes live on a grid dividing q * gcd_all
  int work = q;
  for (int m = 1; m <= gcd_all; ++m) {
    if (gcd_all % m == 0) work = std::lcm(work, natural_grid(S, r / m, {c1.beta / m, c1.alpha / m}));
  }
  TSeries sum(K, work);
  for (int m = 1; m <= gcd_all; ++m) {
    if (gcd_all % m != 0) continue;
    int mu_m = mu(m);
    if (mu_m == 0) continue;
    TSeries hm = h(r / m, {c1.beta / m, c1.alpha / m});
    sum += hm.regrid(work).adams(m) * RatFunc(make_rational(mu_m, m));
  }
  sum *= y_inv_minus_y();
  try {
    return sum.coarsen(q);
  } catch (const GridMismatch&) {
    throw InvariantViolation("Omega series has terms off the r Delta lattice");
  }
}

std::vector<OmegaResult> omega_rows(const RuledSurface& S, int r, const FirstChern& c1, const TSeries& omega) {
  std::vector<OmegaResult> rows;
  const Rational offset = rdelta_offset(S, r, c1);
  for (int i = 0; i < omega.size(); ++i) {
    Rational rdelta = make_rational(i, omega.grid());
    Rational c2 = rdelta + offset;
    if (!is_integer(c2)) {
      if (!omega[i].is_zero()) throw InvariantViolation("Omega at non-integral c_2 = " + c2.get_str());
      continue;
    }
    ChernCharacter gamma(r, c1.beta, c1.alpha, c2);
    Rational dim = 1 - euler_pairing(S, gamma, gamma);
    LaurentPoly coeff;
    try {
      coeff = laurent_from_ratfunc(omega[i]);
    } catch (const NonPolynomial&) {
      throw InvariantViolation("Omega is not a Laurent polynomial at c_2 = " + c2.get_str());
    }
    if (dim < 0) {
      if (!coeff.is_zero()) throw InvariantViolation("non-zero Omega at negative dimension, c_2 = " + c2.get_str());
      continue;
    }
    rows.push_back(extract_betti(S, gamma, coeff));
  }
  return rows;
}

GradedSeries omega_from_omega_bar(const GradedSeries& omega_bar, const MobiusFn& mu) {
  GradedSeries out(omega_bar.rank_bound(), omega_bar.order(), omega_bar.grid());
  for (int m = 1; m <= omega_bar.rank_bound(); ++m) {
    int mu_m = mu(m);
    if (mu_m == 0) continue;
    out += omega_bar.adams(m).scaled(RatFunc(make_rational(mu_m, m)));
  }
  return out.scaled(y_inv_minus_y());
}

GradedSeries omega_bar_from_omega(const GradedSeries& omega) {
  GradedSeries base = omega.scaled(y_inv_minus_y().inverse());
  GradedSeries out(omega.rank_bound(), omega.order(), omega.grid());
  for (int m = 1; m <= omega.rank_bound(); ++m) out += base.adams(m).scaled(RatFunc(make_rational(1, m)));
  return out;
}

}  // namespace dtr
