#pragma once

#include <vector>

#include "dtr/algebra/ratfunc.hpp"
#include "dtr/algebra/tseries.hpp"

namespace dtr::test {

inline LaurentPoly poly(int low, std::vector<int> c) {
  std::vector<Rational> q;
  for (int x : c) q.emplace_back(x);
  return LaurentPoly::from_coeffs(low, std::move(q));
}

inline RatFunc y(int e) { return RatFunc::monomial(e); }

// 1 / (1 - y^e)
inline RatFunc geo(int e) { return RatFunc::inv_one_minus(e); }

inline TSeries series(int K, std::vector<RatFunc> c, int grid = 1) {
  TSeries s(K, grid);
  for (std::size_t i = 0; i < c.size() && static_cast<int>(i) < s.size(); ++i) s[static_cast<int>(i)] = c[i];
  return s;
}

}  // namespace dtr::test
