#pragma once

#include <vector>

#include "dtr/algebra/tseries.hpp"
#include "dtr/geometry/surface.hpp"

namespace dtr {

// Generating function sum_{gamma_2} I(gamma; J) t^{r Delta} for fixed (r, gamma_1).
struct HSeries {
  RuledSurface surface;
  int r = 1;
  FirstChern c1;
  Polarization polarization;
  TSeries series;
};

// c_1^2 for beta C - alpha f
Integer c1_squared(const RuledSurface& S, const FirstChern& c1);
// (r-1) c_1^2 / 2r, so that r Delta = c_2 - offset
Rational rdelta_offset(const RuledSurface& S, int r, const FirstChern& c1);
// grid denominator q for which every r Delta of (r, c1) lies in (1/q) Z
int natural_grid(const RuledSurface& S, int r, const FirstChern& c1);
// (beta mod r, alpha mod r): H_{r, c1} only depends on this class
FirstChern reduce_mod_rank(int r, const FirstChern& c1);

// ordered compositions of r into positive parts
std::vector<std::vector<int>> compositions(int r);
// (-y)^e as a Laurent monomial
LaurentPoly neg_y_monomial(int e);

}  // namespace dtr
