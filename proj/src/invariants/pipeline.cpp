#include "dtr/invariants/pipeline.hpp"

#include <map>
#include <tuple>

#include "dtr/errors.hpp"
#include "dtr/invariants/anticanonical.hpp"
#include "dtr/invariants/boundary.hpp"
#include "dtr/invariants/htoh.hpp"
#include "dtr/invariants/wallcross.hpp"

namespace dtr {

TSeries compute_H(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                  const BoundaryData& B) {
  validate_polarization(S, J);
  const FirstChern red = reduce_mod_rank(r, c1);
  TSeries s;
  if (std::holds_alternative<Boundary>(J)) {
    s = red.beta == 0 ? B.H(r) : TSeries(B.order(), 1);
  } else if (std::holds_alternative<Suitable>(J)) {
    s = suitable_series(r, red, B);
  } else {
    Mixed M = std::holds_alternative<AntiCanonical>(J) ? anticanonical_as_mixed(S) : std::get<Mixed>(J);
    s = wallcross_series(S, r, red, M, B);
  }
  // the series in t^{r Delta} only depends on the twist class
  const int q = natural_grid(S, r, c1);
  return s.grid() == q ? s : s.regrid(q);
}

TSeries compute_h(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                  const BoundaryData& B) {
  const int K = B.order();
  if (std::holds_alternative<Boundary>(J)) throw InvalidInput("the boundary polarization is not generic");
  auto provider = [&](int ri, const FirstChern& c) { return compute_H(S, ri, c, J, B); };
  if (std::holds_alternative<AntiCanonical>(J)) {
    if (c1 == FirstChern{0, 0}) return h_anticanonical(S, r, K).series;
    return h_nongeneric(S, r, c1, J, K, provider);
  }
  if (std::holds_alternative<Mixed>(J)) {
    for (const auto& d : same_slope_decompositions(S, r, c1, J, K)) {
      if (!d.proportional) {
        throw InvalidInput("polarization " + to_string(J) + " is not generic for this class below t^" +
                           std::to_string(K));
      }
    }
  }
  HByRank H;
  for (int ri = 1; ri <= r; ++ri) {
    if ((c1.beta * ri) % r != 0 || (c1.alpha * ri) % r != 0) continue;
    FirstChern c{c1.beta * ri / r, c1.alpha * ri / r};
    H.emplace(ri, HSeries{S, ri, c, J, provider(ri, c)});
  }
  return h_from_H(S, r, c1, K, H).series;
}

std::vector<OmegaResult> compute_omega(const RuledSurface& S, int r, const FirstChern& c1, const Polarization& J,
                                       int K, const MobiusFn& mu) {
  if (r < 1 || r > 3) throw InvalidInput("rank must be 1, 2 or 3");
  if (K < 0) throw InvalidInput("truncation order must be non-negative");
  validate_polarization(S, J);
  BoundaryData B(S.g, r, K);
  auto hb = [&](int ri, const FirstChern& c) { return compute_h(S, ri, c, J, B); };
  TSeries om = omega_series(S, r, c1, K, hb, mu);
  return omega_rows(S, r, c1, om);
}

}  // namespace dtr
