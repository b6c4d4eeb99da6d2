#pragma once

#include "dtr/invariants/hseries.hpp"

namespace dtr {

// sum over a in Z of t^{c (a + shift)^2}, truncated at t^K, on the given grid
TSeries theta_series(const Rational& c, const Rational& shift, int K, int grid);
// sum over a1, a2 in Z of t^{c (a1^2 + a2^2 + a1 a2)}
TSeries theta2_series(const Rational& c, int K, int grid);

// h_{r,0}(-K_S) on Sigma_{0,d}, d in {0, 1}, r <= 3, from the wall-crossed
// H at J_{2,2-d} and the theta-type corrections
HSeries h_anticanonical(const RuledSurface& S, int r, int K);

}  // namespace dtr
