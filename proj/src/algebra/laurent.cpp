#include "dtr/algebra/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "dtr/errors.hpp"

namespace dtr {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(int exp, const Rational& c) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = exp;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Rational> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::one_minus(int e, const Rational& c) {
  return LaurentPoly(1) - monomial(e, c);
}

bool LaurentPoly::is_one() const { return c_.size() == 1 && low_ == 0 && c_[0] == 1; }

Rational LaurentPoly::coeff(int exp) const {
  if (exp < low_ || exp > high() || c_.empty()) return 0;
  return c_[exp - low_];
}

void LaurentPoly::trim() {
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  while (c_.back() == 0) c_.pop_back();
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_ || hi > high()) {
    std::vector<Rational> n(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < c_.size(); ++i) n[i + (low_ - lo)] = std::move(c_[i]);
    c_ = std::move(n);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i + (o.low_ - low_)] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::substitute_power(int n) const {
  if (n < 1) throw InvalidInput("substitute_power needs n >= 1");
  if (n == 1 || is_zero()) return *this;
  std::vector<Rational> out((c_.size() - 1) * static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(n)] = c_[i];
  return from_coeffs(low_ * n, std::move(out));
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return {};
  std::vector<Rational> out(c_.rbegin(), c_.rend());
  return from_coeffs(-high(), std::move(out));
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Rational LaurentPoly::eval(const Rational& y) const {
  if (is_zero()) return 0;
  if (y == 0) {
    if (low_ < 0) throw Pole("evaluation of a negative power at y = 0");
    return coeff(0);
  }
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
  Rational scale = 1;
  Rational base = low_ >= 0 ? y : Rational(1) / y;
  for (int i = 0; i < std::abs(low_); ++i) scale *= base;
  return acc * scale;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low_; --e) {
    Rational c = coeff(e);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rational a = abs(c);
    if (a != 1 || e == 0) os << a.get_str();
    if (e != 0) {
      if (a != 1) os << "*";
      os << "y";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.is_zero()) return {{}, {}};
  if (a.low() < 0 || b.low() < 0) throw InvalidInput("poly_divmod expects polynomials");
  int db = b.high();
  std::vector<Rational> rem(static_cast<std::size_t>(a.high() + 1));
  for (int e = a.low(); e <= a.high(); ++e) rem[e] = a.coeff(e);
  std::vector<Rational> bc(static_cast<std::size_t>(db + 1));
  for (int e = b.low(); e <= db; ++e) bc[e] = b.coeff(e);
  Rational inv_lead = Rational(1) / bc[db];
  int da = a.high();
  if (da < db) return {{}, a};
  std::vector<Rational> quo(static_cast<std::size_t>(da - db + 1));
  for (int k = da - db; k >= 0; --k) {
    Rational q = rem[k + db] * inv_lead;
    if (q == 0) continue;
    quo[k] = q;
    for (int j = b.low(); j <= db; ++j) {
      if (bc[j] != 0) rem[k + j] -= q * bc[j];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {LaurentPoly::from_coeffs(0, std::move(quo)), LaurentPoly::from_coeffs(0, std::move(rem))};
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw DivisionByZero("exact_divide by zero");
  if (a.is_zero()) return {};
  if (b.is_monomial()) {
    LaurentPoly q = a.shifted(-b.low());
    return q * (Rational(1) / b.lowest_coeff());
  }
  // divide polynomial parts; monomial factors handled by the shift
  LaurentPoly an = a.shifted(-a.low());
  LaurentPoly bn = b.shifted(-b.low());
  auto [q, r] = poly_divmod(an, bn);
  if (!r.is_zero()) throw NonPolynomial("division leaves a remainder");
  return q.shifted(a.low() - b.low());
}

namespace {

using ZPoly = std::vector<Integer>;  // ascending degree

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(ZPoly& p) {
  ztrim(p);
  if (p.empty()) return;
  Integer g = zcontent(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

ZPoly to_zpoly(const LaurentPoly& a) {
  // polynomial part with the power of y stripped, denominators cleared
  Integer l = 1;
  for (const auto& c : a.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZPoly p;
  p.reserve(a.length());
  for (const auto& c : a.coeffs()) {
    Integer v = l / c.get_den();
    p.push_back(v * c.get_num());
  }
  make_primitive(p);
  return p;
}

// pseudo-remainder of a by b (deg a >= deg b)
ZPoly prem(ZPoly a, const ZPoly& b) {
  std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    Integer la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[j + shift] -= la * b[j];
    a.pop_back();
    ztrim(a);
  }
  return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) return {Integer(1)};
    ZPoly r = prem(a, b);
    make_primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  make_primitive(a);
  return a;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DivisionByZero("gcd(0, 0)");
  if (a.is_zero() || b.is_zero()) {
    const LaurentPoly& x = a.is_zero() ? b : a;
    LaurentPoly p = x.shifted(-x.low());
    return p * (Rational(1) / p.leading_coeff());
  }
  if (a.length() == 1 || b.length() == 1) return LaurentPoly(1);
  ZPoly g = zgcd(to_zpoly(a), to_zpoly(b));
  std::vector<Rational> c;
  c.reserve(g.size());
  Rational lead(g.back());
  for (auto& x : g) c.emplace_back(Rational(x) / lead);
  return LaurentPoly::from_coeffs(0, std::move(c));
}

}  // namespace dtr
