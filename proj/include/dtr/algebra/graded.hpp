#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>

#include "dtr/algebra/tseries.hpp"

namespace dtr {

int mobius(int n);

using MobiusFn = std::function<int(int)>;

// Grading by rank and first Chern class gamma_1 = beta C - alpha f.
struct GradedKey {
  int rank = 0;
  int beta = 0;
  int alpha = 0;
  auto operator<=>(const GradedKey&) const = default;
  GradedKey operator+(const GradedKey& o) const { return {rank + o.rank, beta + o.beta, alpha + o.alpha}; }
  GradedKey scaled(int n) const { return {rank * n, beta * n, alpha * n}; }
  bool is_zero() const { return rank == 0 && beta == 0 && alpha == 0; }
};

std::string to_string(const GradedKey& k);

// Finite sum of TSeries coefficients times z^key, truncated at rank <= rank_bound.
// Every key other than the zero key has rank >= 1, which makes products and
// exponentials nilpotent modulo the rank bound.
class GradedSeries {
 public:
  GradedSeries(int rank_bound, int order, int grid = 1);

  int rank_bound() const { return rank_bound_; }
  int order() const { return order_; }
  int grid() const { return grid_; }
  const std::map<GradedKey, TSeries>& terms() const { return terms_; }

  // returns the zero series when key is absent
  TSeries at(const GradedKey& key) const;
  void set(const GradedKey& key, const TSeries& s);
  void add_to(const GradedKey& key, const TSeries& s);
  TSeries constant_term() const { return at(GradedKey{}); }

  GradedSeries& operator+=(const GradedSeries& o);
  GradedSeries& operator-=(const GradedSeries& o);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
  GradedSeries scaled(const RatFunc& c) const;
  friend bool operator==(const GradedSeries& a, const GradedSeries& b);

  GradedSeries adams(int n) const;

  std::string to_string() const;

 private:
  void check_compatible(const GradedSeries& o) const;
  void prune();
  int rank_bound_;
  int order_;
  int grid_;
  std::map<GradedKey, TSeries> terms_;
};

// exp(F) for F without constant term
GradedSeries graded_exp(const GradedSeries& f);
// log(F) for F with constant term 1
GradedSeries graded_log(const GradedSeries& f);

GradedSeries plethystic_exp(const GradedSeries& f);
GradedSeries plethystic_log(const GradedSeries& f, const MobiusFn& mu = mobius);

}  // namespace dtr
