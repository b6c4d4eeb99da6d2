#include "dtr/algebra/rational.hpp"

#include "dtr/errors.hpp"

namespace dtr {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

Integer floor(const Rational& x) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

Rational fractional_part(const Rational& x) { return x - Rational(floor(x)); }

bool is_integer(const Rational& x) { return x.get_den() == 1; }

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw InvalidInput("integer out of range: " + x.get_str());
  return x.get_si();
}

std::int64_t to_int64(const Rational& x) {
  if (!is_integer(x)) throw InvalidInput("expected an integer, got " + x.get_str());
  return to_int64(x.get_num());
}

std::string to_string(const Rational& x) { return x.get_str(); }

}  // namespace dtr
