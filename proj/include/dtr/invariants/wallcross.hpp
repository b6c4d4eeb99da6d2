#pragma once

#include <vector>

#include "dtr/invariants/suitable.hpp"

namespace dtr {

// gamma^(i) = (r, beta C - alpha f); the second Chern data does not enter S
struct Part {
  int r = 1;
  int beta = 0;
  int alpha = 0;
};

// S((gamma^(i)), J, J') in {-1, 0, 1}
int joyce_sign(const RuledSurface& S, const std::vector<Part>& parts, const Polarization& J,
               const Polarization& Jp);

// H_{r,c1}(J_{m,n}) by wall-crossing from the boundary polarization, with the
// sum over each chamber resummed as a geometric series.  Works for any r whose
// boundary series are in B; requires m > 0 and n > 0.
TSeries wallcross_series(const RuledSurface& S, int r, const FirstChern& c1, const Mixed& J,
                         const BoundaryData& B);

HSeries wallcross_H2(const RuledSurface& S, const FirstChern& c1, const Rational& m, const Rational& n, int K);
HSeries wallcross_H3(const RuledSurface& S, const FirstChern& c1, const Rational& m, const Rational& n, int K);

// H_{r,c1}(J') from H(J) by direct enumeration of Joyce's formula over a box
// of first Chern classes that is enlarged until it stops contributing.
// J is Suitable or Mixed (Boundary is taken through Suitable); J' is Mixed,
// Suitable or AntiCanonical.
TSeries joyce_wallcross_general(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                                const Polarization& Jp, int K);

}  // namespace dtr
