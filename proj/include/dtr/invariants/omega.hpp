#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dtr/algebra/graded.hpp"
#include "dtr/invariants/hseries.hpp"

namespace dtr {

struct OmegaResult {
  ChernCharacter gamma;
  int dim = 0;
  LaurentPoly omega_poly;
  // b_0 .. b_{2 dim}; empty when Omega vanishes
  std::vector<std::int64_t> betti;
  // b'_0 .. b'_{2 dim - 2g}, for g >= 1
  std::optional<std::vector<std::int64_t>> betti_prime;
  std::int64_t omega = 0;
};

// Betti numbers from the Laurent polynomial Omega_gamma, with every structural
// check applied; throws InvariantViolation on failure.
OmegaResult extract_betti(const RuledSurface& S, const ChernCharacter& gamma, const LaurentPoly& coeff);

using HBarProvider = std::function<TSeries(int r, const FirstChern& c1)>;

// sum_{c_2} Omega_gamma t^{r Delta} = (y^-1 - y) sum_{m | gamma} mu(m)/m h_{r/m, c1/m}(y^m, t^m)
TSeries omega_series(const RuledSurface& S, int r, const FirstChern& c1, int K, const HBarProvider& h,
                     const MobiusFn& mu = mobius);

// one row per integral c_2 with 0 <= r Delta <= K and dim >= 0
std::vector<OmegaResult> omega_rows(const RuledSurface& S, int r, const FirstChern& c1, const TSeries& omega);

// graded forms of the same relation and its inverse
GradedSeries omega_from_omega_bar(const GradedSeries& omega_bar, const MobiusFn& mu = mobius);
GradedSeries omega_bar_from_omega(const GradedSeries& omega);

}  // namespace dtr
