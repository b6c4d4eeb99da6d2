#pragma once

#include <vector>

#include "dtr/invariants/omega.hpp"
#include "dtr/invariants/suitable.hpp"

namespace dtr {

// H_{r,c1}(J), on the natural grid of (r, c1)
TSeries compute_H(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                  const BoundaryData& B);
// h_{r,c1}(J); Boundary is rejected as non-generic
TSeries compute_h(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                  const BoundaryData& B);

std::vector<OmegaResult> compute_omega(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                                       int K, const MobiusFn& mu = mobius);

}  // namespace dtr
