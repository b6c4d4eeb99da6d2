#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dtr/invariants/hseries.hpp"

namespace dtr {

// H_{r_i, gamma_1^(i)} of the proportional parts, keyed by rank.  Every entry
// must carry the class (r_i / r) gamma_1.
using HByRank = std::map<int, HSeries>;

// h_{r,c1} as the finite sum over ordered proportional decompositions
TSeries h_decomposition(const RuledSurface& S, int r, const FirstChern& c1, int K, const HByRank& H);
// h_{r,c1} as the z^gamma coefficient of log(1 + sum H z^gamma)
TSeries h_log(const RuledSurface& S, int r, const FirstChern& c1, int K, const HByRank& H);
// both routes, which must agree; throws InvariantViolation otherwise
HSeries h_from_H(const RuledSurface& S, int r, const FirstChern& c1, int K, const HByRank& H);

// An ordered decomposition (r_i, gamma_1^(i)) of (r, gamma_1) with all parts of
// the same J-slope.  shift = gamma_1^2 / 2r - sum (gamma_1^(i))^2 / 2r_i >= 0.
struct SameSlopeDecomposition {
  std::vector<int> ranks;
  std::vector<FirstChern> classes;
  Rational shift;
  bool proportional = true;
};

// every same-slope decomposition with shift <= K; J is Mixed or AntiCanonical
std::vector<SameSlopeDecomposition> same_slope_decompositions(const RuledSurface& S, int r, const FirstChern& c1,
                                                              const Polarization& J, int K);

using HProvider = std::function<TSeries(int r, const FirstChern& c1)>;

// h_{r,c1} for a possibly non-generic J, summing over all same-slope
// decompositions with their t-shifts
TSeries h_nongeneric(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J, int K,
                     const HProvider& H);

}  // namespace dtr
