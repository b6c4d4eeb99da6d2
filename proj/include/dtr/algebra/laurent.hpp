#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dtr/algebra/rational.hpp"

namespace dtr {

// Laurent polynomial in y with rational coefficients.  Stored densely from the
// lowest nonzero exponent; the ends of the coefficient vector are never zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT

  static LaurentPoly monomial(int exp, const Rational& c = 1);
  // coeffs[i] is the coefficient of y^(low + i)
  static LaurentPoly from_coeffs(int low, std::vector<Rational> coeffs);
  // (1 - c y^e)
  static LaurentPoly one_minus(int e, const Rational& c = 1);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1 && (c_.empty() || low_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  bool is_one() const;
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  std::size_t length() const { return c_.size(); }
  Rational coeff(int exp) const;
  const Rational& lowest_coeff() const { return c_.front(); }
  const Rational& leading_coeff() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // multiply by y^k
  LaurentPoly shifted(int k) const;
  // y -> y^n (n >= 1)
  LaurentPoly substitute_power(int n) const;
  // y -> y^-1
  LaurentPoly reflected() const;
  LaurentPoly pow(unsigned e) const;
  Rational eval(const Rational& y) const;

  std::string to_string() const;

 private:
  void trim();
  int low_ = 0;
  std::vector<Rational> c_;
};

// Division of polynomials in y (both arguments must have low() >= 0).
// Returns {quotient, remainder}.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b as Laurent polynomials; throws NonPolynomial if b does not
// divide a.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

// Greatest common divisor of the polynomial parts of a and b (powers of y
// stripped), normalised to have positive leading coefficient 1 and low() == 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace dtr
