#include "dtr/geometry/surface.hpp"

#include <cstdlib>
#include <sstream>

#include "dtr/errors.hpp"

namespace dtr {

RuledSurface::RuledSurface(int genus, int degree) : g(genus), d(degree) {
  if (genus < 0 || degree < 0) throw InvalidInput("ruled surface needs g >= 0 and d >= 0");
}

Rational intersect(const RuledSurface& S, const DivisorClass& a, const DivisorClass& b) {
  // C^2 = -d, C.f = 1, f^2 = 0
  return -S.d * a.cC * b.cC + a.cC * b.cf + a.cf * b.cC;
}

DivisorClass canonical_class(const RuledSurface& S) { return {-2, 2 * S.g - 2 - S.d}; }

ChernCharacter::ChernCharacter(int rank, Rational b, Rational a, Rational second)
    : r(rank), beta(std::move(b)), alpha(std::move(a)), c2(std::move(second)) {
  if (rank < 1) throw InvalidInput("rank must be positive");
}

ChernCharacter ChernCharacter::from_gamma2(const RuledSurface& S, int rank, const Rational& b,
                                           const Rational& a, const Rational& gamma2) {
  ChernCharacter g(rank, b, a, 0);
  g.c2 = g.c1_squared(S) / 2 - gamma2;
  return g;
}

Rational ChernCharacter::c1_squared(const RuledSurface& S) const { return intersect(S, c1(), c1()); }

Rational ChernCharacter::gamma2(const RuledSurface& S) const { return c1_squared(S) / 2 - c2; }

std::string ChernCharacter::to_string() const {
  std::ostringstream os;
  os << "(r=" << r << ", beta=" << beta.get_str() << ", alpha=" << alpha.get_str() << ", c2=" << c2.get_str()
     << ")";
  return os.str();
}

Rational euler_pairing(const RuledSurface& S, const ChernCharacter& a, const ChernCharacter& b) {
  DivisorClass K = canonical_class(S);
  Rational g2a = a.gamma2(S);
  Rational g2b = b.gamma2(S);
  DivisorClass skew = a.c1() * Rational(b.r) - b.c1() * Rational(a.r);
  return g2b * a.r + g2a * b.r - intersect(S, a.c1(), b.c1()) + intersect(S, skew, K) / 2 +
         Rational(S.chi_O() * a.r * b.r);
}

Rational antisymmetric_pairing(const RuledSurface& S, const ChernCharacter& a, const ChernCharacter& b) {
  return euler_pairing(S, a, b) - euler_pairing(S, b, a);
}

Rational discriminant(const RuledSurface& S, const ChernCharacter& g) {
  Rational c1sq = g.c1_squared(S);
  return (g.c2 - make_rational(g.r - 1, 2 * g.r) * c1sq) / g.r;
}

ChernCharacter twist(const RuledSurface& S, const ChernCharacter& g, const DivisorClass& D) {
  // ch(F (x) L) = ch(F) e^D
  DivisorClass c1 = g.c1() + D * Rational(g.r);
  Rational gamma2 = g.gamma2(S) + intersect(S, g.c1(), D) + Rational(g.r) * intersect(S, D, D) / 2;
  return ChernCharacter::from_gamma2(S, g.r, c1.beta(), c1.alpha(), gamma2);
}

ChernCharacter divide(const RuledSurface& S, const ChernCharacter& g, int m) {
  if (m < 1 || g.r % m != 0) throw InvalidInput("rank not divisible by " + std::to_string(m));
  Rational inv = make_rational(1, m);
  return ChernCharacter::from_gamma2(S, g.r / m, g.beta * inv, g.alpha * inv, g.gamma2(S) * inv);
}

Rational delta_of_filtration(const RuledSurface& S, const std::vector<ChernCharacter>& parts) {
  if (parts.empty()) throw InvalidInput("filtration needs at least one part");
  Rational total = 0;
  for (const auto& p : parts) total += Rational(p.r) * discriminant(S, p);
  int head_rank = parts[0].r;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const auto& gi = parts[i];
    DivisorClass xi{0, 0};
    for (std::size_t j = 0; j < i; ++j) xi = xi + parts[j].c1() * Rational(gi.r) - gi.c1() * Rational(parts[j].r);
    int upto = head_rank + gi.r;
    total -= intersect(S, xi, xi) / (2 * gi.r * upto * head_rank);
    head_rank = upto;
  }
  return total;
}

Rational dim_from_rdelta(const RuledSurface& S, int r, const Rational& r_delta) {
  return 2 * r * r_delta - r * r * S.chi_O() + 1;
}

int dim_moduli(const RuledSurface& S, const ChernCharacter& g) {
  Rational dim = 1 - euler_pairing(S, g, g);
  if (!is_integer(dim)) throw InvalidInput("non-integral moduli dimension for " + g.to_string());
  if (dim < 0) throw InvalidInput("negative moduli dimension for " + g.to_string());
  return static_cast<int>(to_int64(dim));
}

void validate_polarization(const RuledSurface& S, const Polarization& J) {
  if (std::holds_alternative<AntiCanonical>(J)) {
    if (S.g != 0 || S.d > 1) throw InvalidInput("anticanonical polarization needs g = 0 and d in {0, 1}");
  }
  if (const auto* m = std::get_if<Mixed>(&J)) {
    if (m->m <= 0) throw InvalidInput("J_{m,n} needs m > 0");
    if (m->n < 0) throw InvalidInput("J_{m,n} needs n >= 0");
  }
}

namespace {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0) throw InvalidInput("cannot parse number '" + s + "'");
  if (q.get_den() == 0) throw InvalidInput("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

Polarization parse_polarization(const std::string& text) {
  std::string t = trim(text);
  if (t == "boundary") return Boundary{};
  if (t == "suitable") return Suitable{};
  if (t == "anticanonical") return AntiCanonical{};
  auto comma = t.find(',');
  if (comma == std::string::npos) throw InvalidInput("unknown polarization '" + text + "'");
  Mixed m{parse_rational(trim(t.substr(0, comma))), parse_rational(trim(t.substr(comma + 1)))};
  if (m.m <= 0 || m.n < 0) throw InvalidInput("polarization '" + text + "' needs m > 0 and n >= 0");
  return m;
}

std::string to_string(const Polarization& J) {
  if (std::holds_alternative<Boundary>(J)) return "boundary";
  if (std::holds_alternative<Suitable>(J)) return "suitable";
  if (std::holds_alternative<AntiCanonical>(J)) return "anticanonical";
  const auto& m = std::get<Mixed>(J);
  return m.m.get_str() + "," + m.n.get_str();
}

Mixed anticanonical_as_mixed(const RuledSurface& S) {
  validate_polarization(S, AntiCanonical{});
  return Mixed{2, 2 - S.d};
}

DivisorClass polarization_class(const RuledSurface& S, const Polarization& J) {
  if (std::holds_alternative<Boundary>(J)) return DivisorClass::f();
  if (std::holds_alternative<Suitable>(J)) throw InvalidInput("J_{eps,1} has no finite class");
  Mixed m = std::holds_alternative<AntiCanonical>(J) ? anticanonical_as_mixed(S) : std::get<Mixed>(J);
  return {m.m, m.m * S.d + m.n};
}

SlopeValue slope(const RuledSurface& S, const Polarization& J, int r, const Rational& beta, const Rational& alpha) {
  DivisorClass c1 = DivisorClass::from_beta_alpha(beta, alpha);
  if (std::holds_alternative<Suitable>(J)) {
    // J_{eps,1} = eps (C + d f) + f
    DivisorClass lead = DivisorClass::C() + DivisorClass::f() * Rational(S.d);
    return {intersect(S, c1, DivisorClass::f()) / r, intersect(S, c1, lead) / r};
  }
  return {intersect(S, c1, polarization_class(S, J)) / r, 0};
}

SlopeAndHilbert slope_and_hilbert(const RuledSurface& S, const ChernCharacter& g, const Polarization& J) {
  SlopeAndHilbert out;
  out.mu = slope(S, J, g.r, g.beta, g.alpha).main;
  if (std::holds_alternative<Boundary>(J) || std::holds_alternative<Suitable>(J)) return out;
  DivisorClass Jc = polarization_class(S, J);
  DivisorClass K = canonical_class(S);
  HilbertPoly p;
  p.a2 = intersect(S, Jc, Jc) / 2;
  p.a1 = intersect(S, g.c1(), Jc) / g.r - intersect(S, K, Jc) / 2;
  p.a0 = (g.gamma2(S) - intersect(S, K, g.c1()) / 2) / g.r + S.chi_O();
  out.hilbert = p;
  return out;
}

SuitabilityResult is_suitable(const RuledSurface& S, const Mixed& J, const ChernCharacter& g) {
  if (J.m <= 0) throw InvalidInput("suitability check needs m > 0");
  Rational delta = discriminant(S, g);
  SuitabilityResult res;
  if (delta <= 0) return res;
  // -r^4 Delta / 2 <= xi^2 < 0 with xi = b C - a f forces |b| <= r^4 Delta / 2
  Rational bound = Rational(g.r * g.r * g.r * g.r) * delta / 2;
  long L = static_cast<long>(to_int64(floor(bound)));
  DivisorClass Jc = polarization_class(S, J);
  for (long mag = 1; mag <= L; ++mag) {
    for (long b : {mag, -mag}) {
      // xi^2 = -d b^2 - 2 a b; solve the bound for a
      Rational lo = make_rational(-S.d * b, 2);  // xi^2 < 0 side
      Rational hi = (bound - S.d * b * b) / (2 * b);  // xi^2 >= -bound side
      if (b < 0) std::swap(lo, hi);
      Integer a0 = floor(lo) - 1;
      Integer a1 = floor(hi) + 1;
      for (Integer a = a0; a <= a1; ++a) {
        DivisorClass xi = DivisorClass::from_beta_alpha(Rational(b), Rational(a));
        Rational sq = intersect(S, xi, xi);
        if (!(sq < 0 && sq >= -bound)) continue;
        bool realizable = false;
        for (int r1 = 1; r1 < g.r && !realizable; ++r1) {
          // xi = r1 gamma_1 - r gamma_1^(1)
          Rational db = Rational(b) - g.beta * r1;
          Rational da = Rational(a) - g.alpha * r1;
          realizable = is_integer(db / g.r) && is_integer(da / g.r);
        }
        if (!realizable) continue;
        Rational xf = intersect(S, xi, DivisorClass::f());
        Rational xj = intersect(S, xi, Jc);
        if (xf != 0 && xf * xj <= 0) {
          res.suitable = false;
          res.witness = xi;
          return res;
        }
      }
    }
  }
  return res;
}

}  // namespace dtr
