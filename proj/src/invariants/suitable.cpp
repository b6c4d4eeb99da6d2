#include "dtr/invariants/suitable.hpp"

#include "dtr/errors.hpp"
#include "dtr/invariants/boundary.hpp"

namespace dtr {

BoundaryData::BoundaryData(int g, int rmax, int K) : g_(g), K_(K) {
  if (rmax < 1) throw InvalidInput("rank bound must be positive");
  for (int r = 1; r <= rmax; ++r) H_.push_back(boundary_series(g, r, K, 1));
}

const TSeries& BoundaryData::H(int r) const {
  if (r < 1 || r > max_rank()) throw InvalidInput("rank " + std::to_string(r) + " outside the boundary data");
  return H_[static_cast<std::size_t>(r - 1)];
}

RatFunc suitable_weight(const std::vector<int>& parts, int alpha) {
  int r = 0;
  for (int p : parts) r += p;
  Rational expo = 0;
  LaurentPoly den = 1;
  int tail = r;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    tail -= parts[i - 1];
    int w = parts[i] + parts[i - 1];
    expo += 2 * w * fractional_part(make_rational(static_cast<std::int64_t>(alpha) * tail, r));
    den = den * LaurentPoly::one_minus(2 * w);
  }
  if (!is_integer(expo)) throw InvariantViolation("fractional y exponent in the resummed formula");
  return RatFunc(LaurentPoly::monomial(static_cast<int>(to_int64(expo))), den);
}

TSeries suitable_series(int r, const FirstChern& c1, const BoundaryData& B) {
  TSeries out(B.order(), 1);
  if (((c1.beta % r) + r) % r != 0) return out;
  for (const auto& parts : compositions(r)) {
    TSeries prod = B.H(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) prod = prod * B.H(parts[i]);
    out += prod * suitable_weight(parts, c1.alpha);
  }
  return out;
}

HSeries H_suitable(const RuledSurface& S, int r, const FirstChern& c1, int K) {
  BoundaryData B(S.g, r, K);
  return {S, r, c1, Suitable{}, suitable_series(r, c1, B)};
}

}  // namespace dtr
