#pragma once

#include <vector>

#include "dtr/invariants/hseries.hpp"

namespace dtr {

// Boundary series H_1..H_rmax of one genus, computed once and shared by the
// resummation and wall-crossing code.
class BoundaryData {
 public:
  BoundaryData(int g, int rmax, int K);
  int genus() const { return g_; }
  int order() const { return K_; }
  int max_rank() const { return static_cast<int>(H_.size()); }
  // H_r on grid 1
  const TSeries& H(int r) const;
  // H_r on a finer grid
  TSeries H(int r, int grid) const { return H(r).regrid(grid); }

 private:
  int g_;
  int K_;
  std::vector<TSeries> H_;
};

// y-weight of a composition in the resummed suitable-polarization formula
RatFunc suitable_weight(const std::vector<int>& parts, int alpha);

TSeries suitable_series(int r, const FirstChern& c1, const BoundaryData& B);
HSeries H_suitable(const RuledSurface& S, int r, const FirstChern& c1, int K);

}  // namespace dtr
