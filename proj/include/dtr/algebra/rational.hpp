#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace dtr {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational num/den. Throws DivisionByZero when den == 0.
Rational make_rational(std::int64_t num, std::int64_t den = 1);

// floor(x) for an exact rational.
Integer floor(const Rational& x);

// x - floor(x), always in [0, 1).
Rational fractional_part(const Rational& x);

bool is_integer(const Rational& x);

// Narrowing conversion; throws InvalidInput if x is not an integer that fits.
std::int64_t to_int64(const Rational& x);
std::int64_t to_int64(const Integer& x);

std::string to_string(const Rational& x);

inline int sign(const Rational& x) { return sgn(x); }

}  // namespace dtr
