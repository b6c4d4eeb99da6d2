#pragma once

#include <string>

#include "dtr/algebra/laurent.hpp"

namespace dtr {

// Quotient num/den of Laurent polynomials in canonical form: den is a
// polynomial with nonzero constant term and leading coefficient 1, and
// gcd(num, den) = 1.  Equal functions have identical representations.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}     // NOLINT
  RatFunc(int c) : num_(c), den_(1) {}                 // NOLINT
  RatFunc(const LaurentPoly& num, const LaurentPoly& den);

  static RatFunc monomial(int exp, const Rational& c = 1) { return LaurentPoly::monomial(exp, c); }
  // (-y)^e
  static RatFunc neg_y_pow(int e);
  // 1 / (1 - c y^e)
  static RatFunc inv_one_minus(int e, const Rational& c = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc inverse() const;
  // y -> y^n
  RatFunc psi(int n) const;
  RatFunc pow(int e) const;
  Rational eval(const Rational& y) const;

  std::string to_string() const;

 private:
  struct Canonical {};
  RatFunc(LaurentPoly num, LaurentPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
  static RatFunc make(LaurentPoly num, LaurentPoly den);

  LaurentPoly num_;
  LaurentPoly den_{1};
};

// The Laurent polynomial equal to f; throws NonPolynomial if f has a genuine
// denominator.
LaurentPoly laurent_from_ratfunc(const RatFunc& f);

}  // namespace dtr
