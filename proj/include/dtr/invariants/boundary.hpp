#pragma once

#include "dtr/invariants/hseries.hpp"

namespace dtr {

// Z_C(x) = (1 - y x)^{2g} / ((1 - x)(1 - y^2 x)) at x = y^a t^b, truncated at t^K.
TSeries zeta_curve(int g, int a, int b, int K, int grid = 1);

// Poincare series of the stack of rank r degree 0 bundles on C.
RatFunc bun_poincare(int g, int r);

// H_r(y, t) for the fibre class polarization, on the given grid.
TSeries boundary_series(int g, int r, int K, int grid = 1);

// H_{r, gamma_1}(J_{0,1}): H_r when beta = 0 mod r, zero otherwise.
HSeries H_boundary(const RuledSurface& S, int r, const FirstChern& c1, int K);

}  // namespace dtr
