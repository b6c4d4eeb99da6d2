#include "dtr/algebra/ratfunc.hpp"

#include "dtr/errors.hpp"

namespace dtr {

namespace {

// Put den into canonical shape assuming gcd(num, den) == 1 already.
void normalise(LaurentPoly& num, LaurentPoly& den) {
  if (den.low() != 0) {
    num = num.shifted(-den.low());
    den = den.shifted(-den.low());
  }
  const Rational lead = den.leading_coeff();
  if (lead != 1) {
    Rational inv = Rational(1) / lead;
    num *= inv;
    den *= inv;
  }
}

}  // namespace

RatFunc RatFunc::make(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return RatFunc();
  if (!den.is_monomial()) {
    LaurentPoly g = poly_gcd(num, den);
    if (!g.is_one()) {
      num = exact_divide(num, g);
      den = exact_divide(den, g);
    }
  }
  if (den.is_monomial()) {
    num = num.shifted(-den.low()) * (Rational(1) / den.lowest_coeff());
    return RatFunc(std::move(num), LaurentPoly(1), Canonical{});
  }
  normalise(num, den);
  return RatFunc(std::move(num), std::move(den), Canonical{});
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) { *this = make(num, den); }

RatFunc RatFunc::neg_y_pow(int e) {
  return LaurentPoly::monomial(e, (e % 2 == 0) ? 1 : -1);
}

RatFunc RatFunc::inv_one_minus(int e, const Rational& c) {
  return RatFunc(LaurentPoly(1), LaurentPoly::one_minus(e, c));
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Canonical{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, LaurentPoly(1), RatFunc::Canonical{});
  if (a.den_ == b.den_) {
    LaurentPoly n = a.num_ + b.num_;
    if (n.is_zero()) return RatFunc();
    LaurentPoly g = poly_gcd(n, a.den_);
    if (g.is_one()) return RatFunc(std::move(n), a.den_, RatFunc::Canonical{});
    return RatFunc::make(exact_divide(n, g), exact_divide(a.den_, g));
  }
  if (b.den_.is_one()) {
    return RatFunc(a.num_ + b.num_ * a.den_, a.den_, RatFunc::Canonical{});
  }
  if (a.den_.is_one()) {
    return RatFunc(b.num_ + a.num_ * b.den_, b.den_, RatFunc::Canonical{});
  }
  LaurentPoly g = poly_gcd(a.den_, b.den_);
  if (g.is_one()) {
    LaurentPoly n = a.num_ * b.den_ + b.num_ * a.den_;
    LaurentPoly d = a.den_ * b.den_;
    // coprime denominators: the sum is already reduced
    if (n.is_zero()) return RatFunc();
    normalise(n, d);
    return RatFunc(std::move(n), std::move(d), RatFunc::Canonical{});
  }
  LaurentPoly bd = exact_divide(b.den_, g);
  LaurentPoly ad = exact_divide(a.den_, g);
  LaurentPoly n = a.num_ * bd + b.num_ * ad;
  if (n.is_zero()) return RatFunc();
  LaurentPoly d = a.den_ * bd;
  LaurentPoly g2 = poly_gcd(n, g);
  if (!g2.is_one()) {
    n = exact_divide(n, g2);
    d = exact_divide(d, g2);
  }
  normalise(n, d);
  return RatFunc(std::move(n), std::move(d), RatFunc::Canonical{});
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, LaurentPoly(1), RatFunc::Canonical{});
  LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_one() && an.length() > 1) {
    LaurentPoly g = poly_gcd(an, bd);
    if (!g.is_one()) {
      an = exact_divide(an, g);
      bd = exact_divide(bd, g);
    }
  }
  if (!ad.is_one() && bn.length() > 1) {
    LaurentPoly g = poly_gcd(bn, ad);
    if (!g.is_one()) {
      bn = exact_divide(bn, g);
      ad = exact_divide(ad, g);
    }
  }
  LaurentPoly n = an * bn;
  LaurentPoly d = ad * bd;
  normalise(n, d);
  return RatFunc(std::move(n), std::move(d), RatFunc::Canonical{});
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return make(den_, num_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

RatFunc RatFunc::psi(int n) const {
  if (n == 1) return *this;
  // y -> y^n keeps coprimality and the shape of den
  return RatFunc(num_.substitute_power(n), den_.substitute_power(n), Canonical{});
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  unsigned u = static_cast<unsigned>(e);
  while (u) {
    if (u & 1U) result *= base;
    u >>= 1U;
    if (u) base *= base;
  }
  return result;
}

Rational RatFunc::eval(const Rational& y) const {
  Rational d = den_.eval(y);
  if (d == 0) throw Pole("rational function evaluated at a pole");
  return num_.eval(y) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

LaurentPoly laurent_from_ratfunc(const RatFunc& f) {
  if (!f.is_laurent()) throw NonPolynomial("not a Laurent polynomial: " + f.to_string());
  return f.num();
}

}  // namespace dtr
