#pragma once

#include <string>
#include <vector>

#include "dtr/algebra/ratfunc.hpp"

namespace dtr {

// Power series in t truncated at t^K (inclusive), exponents on the grid (1/q)Z.
// Index i holds the coefficient of t^(i/q).
class TSeries {
 public:
  TSeries() : TSeries(0, 1) {}
  TSeries(int order, int grid);

  static TSeries zero(int order, int grid = 1) { return TSeries(order, grid); }
  static TSeries constant(const RatFunc& c, int order, int grid = 1);
  // c * t^(index/grid); dropped if beyond the order
  static TSeries term(const RatFunc& c, int index, int order, int grid = 1);

  int order() const { return order_; }
  int grid() const { return grid_; }
  int size() const { return static_cast<int>(c_.size()); }
  const RatFunc& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  RatFunc& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  // coefficient of t^e; zero when e is off the grid or beyond the order
  RatFunc coeff(const Rational& e) const;
  bool is_zero() const;

  TSeries operator-() const;
  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const RatFunc& s);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const RatFunc& s) { return a *= s; }
  friend TSeries operator*(const RatFunc& s, TSeries a) { return a *= s; }
  friend bool operator==(const TSeries& a, const TSeries& b);
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

  TSeries inverse() const;
  // y -> y^n, t -> t^n, re-truncated at the same order
  TSeries adams(int n) const;
  // same series on the finer grid new_grid (a multiple of grid)
  TSeries regrid(int new_grid) const;
  // same series on a coarser grid; throws GridMismatch if a term is off it
  TSeries coarsen(int new_grid) const;
  // smallest grid dividing the current one that holds every nonzero term
  int minimal_grid() const;
  TSeries truncated(int new_order) const;

  std::string to_string() const;

 private:
  void check_compatible(const TSeries& o, const char* what) const;
  int order_;
  int grid_;
  std::vector<RatFunc> c_;
};

}  // namespace dtr
