#include "dtr/invariants/anticanonical.hpp"

#include "dtr/errors.hpp"
#include "dtr/invariants/suitable.hpp"
#include "dtr/invariants/wallcross.hpp"

namespace dtr {

namespace {

void add_term(TSeries& s, const Rational& e) {
  Rational idx = e * s.grid();
  if (!is_integer(idx)) throw InvalidInput("theta exponent off the grid");
  if (idx <= Rational(s.size() - 1)) {
    auto i = static_cast<int>(to_int64(idx));
    s[i] += RatFunc(1);
  }
}

}  // namespace

TSeries theta_series(const Rational& c, const Rational& shift, int K, int grid) {
  if (c <= 0) throw InvalidInput("theta series needs a positive quadratic form");
  TSeries s(K, grid);
  // c (a + shift)^2 <= K bounds |a + shift|
  Integer bound = floor(Rational(K) / c) + 1;
  long B = to_int64(bound) + 1;
  for (long a = -B - 1; a <= B + 1; ++a) {
    Rational x = Rational(a) + shift;
    Rational e = c * x * x;
    if (e <= K) add_term(s, e);
  }
  return s;
}

TSeries theta2_series(const Rational& c, int K, int grid) {
  if (c <= 0) throw InvalidInput("theta series needs a positive quadratic form");
  TSeries s(K, grid);
  // a1^2 + a2^2 + a1 a2 >= (a1^2 + a2^2) / 2
  long B = to_int64(floor(2 * Rational(K) / c)) + 1;
  for (long a1 = -B; a1 <= B; ++a1) {
    for (long a2 = -B; a2 <= B; ++a2) {
      Rational e = c * Rational(a1 * a1 + a2 * a2 + a1 * a2);
      if (e <= K) add_term(s, e);
    }
  }
  return s;
}

HSeries h_anticanonical(const RuledSurface& S, int r, int K) {
  validate_polarization(S, AntiCanonical{});
  if (r < 1 || r > 3) throw InvalidInput("anticanonical corrections are implemented for r <= 3");
  const int d = S.d;
  const Mixed J = anticanonical_as_mixed(S);
  BoundaryData B(S.g, r, K);
  const int q = 2;
  const TSeries H1 = B.H(1, q);
  HSeries out{S, r, {0, 0}, AntiCanonical{}, TSeries(K, 1)};
  if (r == 1) {
    out.series = B.H(1);
    return out;
  }
  if (r == 2) {
    TSeries h = wallcross_series(S, 2, {0, 0}, J, B).regrid(q);
    h -= H1 * H1 * theta_series(2 * (1 + 3 * d), 0, K, q) * RatFunc(make_rational(1, 2));
    out.series = h.coarsen(1);
    return out;
  }
  TSeries H30 = wallcross_series(S, 3, {0, 0}, J, B).regrid(q);
  TSeries H20 = wallcross_series(S, 2, {0, 0}, J, B).regrid(q);
  // gamma_1 = (d - 1) C + f, i.e. beta = d - 1 and alpha = -1
  TSeries H2h = wallcross_series(S, 2, {d - 1, -1}, J, B);
  H2h = H2h.regrid(q);
  TSeries h = H30;
  h -= H1 * H20 * theta_series(6 * (1 + 3 * d), 0, K, q);
  h -= H1 * H2h * theta_series(6 * (1 + 3 * d), make_rational(1, 2), K, q);
  h += H1 * H1 * H1 * theta2_series(2 * (1 + 3 * d), K, q) * RatFunc(make_rational(1, 3));
  try {
    out.series = h.coarsen(1);
  } catch (const GridMismatch&) {
    throw InvariantViolation("anticanonical h has terms off the integral lattice");
  }
  return out;
}

}  // namespace dtr
