#pragma once

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dtr/algebra/rational.hpp"

namespace dtr {

// Ruled surface Sigma_{g,d} = P(L + O_C) over a genus g curve, deg L = d.
struct RuledSurface {
  int g = 0;
  int d = 0;

  RuledSurface() = default;
  RuledSurface(int genus, int degree);
  int chi_O() const { return 1 - g; }
  bool operator==(const RuledSurface&) const = default;
};

// cC * C + cf * f
struct DivisorClass {
  Rational cC = 0;
  Rational cf = 0;

  static DivisorClass C() { return {1, 0}; }
  static DivisorClass f() { return {0, 1}; }
  // beta C - alpha f
  static DivisorClass from_beta_alpha(const Rational& beta, const Rational& alpha) { return {beta, -alpha}; }
  Rational beta() const { return cC; }
  Rational alpha() const { return -cf; }

  DivisorClass operator+(const DivisorClass& o) const { return {cC + o.cC, cf + o.cf}; }
  DivisorClass operator-(const DivisorClass& o) const { return {cC - o.cC, cf - o.cf}; }
  DivisorClass operator*(const Rational& s) const { return {cC * s, cf * s}; }
  bool operator==(const DivisorClass&) const = default;
};

Rational intersect(const RuledSurface& S, const DivisorClass& a, const DivisorClass& b);
DivisorClass canonical_class(const RuledSurface& S);

// Chern data (r, gamma_1 = beta C - alpha f, c_2).
struct ChernCharacter {
  int r = 1;
  Rational beta = 0;
  Rational alpha = 0;
  Rational c2 = 0;

  ChernCharacter() = default;
  ChernCharacter(int rank, Rational b, Rational a, Rational second);
  static ChernCharacter from_gamma2(const RuledSurface& S, int rank, const Rational& b, const Rational& a,
                                    const Rational& gamma2);

  DivisorClass c1() const { return DivisorClass::from_beta_alpha(beta, alpha); }
  Rational c1_squared(const RuledSurface& S) const;
  // gamma_2 = c_1^2 / 2 - c_2
  Rational gamma2(const RuledSurface& S) const;

  std::string to_string() const;
};

// beta C - alpha f with integral entries, the form used throughout the invariants
struct FirstChern {
  int beta = 0;
  int alpha = 0;
  auto operator<=>(const FirstChern&) const = default;
};

Rational euler_pairing(const RuledSurface& S, const ChernCharacter& a, const ChernCharacter& b);
Rational antisymmetric_pairing(const RuledSurface& S, const ChernCharacter& a, const ChernCharacter& b);
Rational discriminant(const RuledSurface& S, const ChernCharacter& g);
// ch(F (x) L) for a line bundle with first Chern class D
ChernCharacter twist(const RuledSurface& S, const ChernCharacter& g, const DivisorClass& D);
// gamma / m, i.e. the character whose m-fold multiple is gamma
ChernCharacter divide(const RuledSurface& S, const ChernCharacter& g, int m);
// r * Delta of the sum, evaluated through the filtration formula
Rational delta_of_filtration(const RuledSurface& S, const std::vector<ChernCharacter>& parts);
// dim M_gamma = 1 - chi(gamma, gamma); throws InvalidInput when negative
int dim_moduli(const RuledSurface& S, const ChernCharacter& g);
// same quantity from r and r * Delta, without the negativity check
Rational dim_from_rdelta(const RuledSurface& S, int r, const Rational& r_delta);

// Polarizations of Sigma_{g,d}.  J_{m,n} = m (C + d f) + n f.
struct Boundary {
  bool operator==(const Boundary&) const = default;
};
// J_{eps,1} for eps -> 0+, never materialised as a number
struct Suitable {
  bool operator==(const Suitable&) const = default;
};
struct Mixed {
  Rational m;
  Rational n;
  bool operator==(const Mixed&) const = default;
};
struct AntiCanonical {
  bool operator==(const AntiCanonical&) const = default;
};
using Polarization = std::variant<Boundary, Suitable, Mixed, AntiCanonical>;

void validate_polarization(const RuledSurface& S, const Polarization& J);
// parse "boundary", "suitable", "anticanonical" or "m,n"
Polarization parse_polarization(const std::string& text);
std::string to_string(const Polarization& J);
// -K as J_{2,2-d}; only for Sigma_{0,0} and Sigma_{0,1}
Mixed anticanonical_as_mixed(const RuledSurface& S);
// explicit class of J; Suitable has no finite representative
DivisorClass polarization_class(const RuledSurface& S, const Polarization& J);

// Slope value ordered lexicographically: (main, eps) stands for main + eps * e
// with e a positive infinitesimal.
struct SlopeValue {
  Rational main = 0;
  Rational eps = 0;
  friend bool operator==(const SlopeValue& a, const SlopeValue& b) { return a.main == b.main && a.eps == b.eps; }
  friend bool operator<(const SlopeValue& a, const SlopeValue& b) {
    if (a.main != b.main) return a.main < b.main;
    return a.eps < b.eps;
  }
  friend bool operator<=(const SlopeValue& a, const SlopeValue& b) { return !(b < a); }
  friend bool operator>(const SlopeValue& a, const SlopeValue& b) { return b < a; }
};

// mu_J(gamma) = gamma_1 . J / r, from rank and (beta, alpha)
SlopeValue slope(const RuledSurface& S, const Polarization& J, int r, const Rational& beta, const Rational& alpha);

// Reduced Hilbert polynomial p_J(n) = a2 n^2 + a1 n + a0.
struct HilbertPoly {
  Rational a2, a1, a0;
  bool operator==(const HilbertPoly&) const = default;
};
struct SlopeAndHilbert {
  Rational mu;
  std::optional<HilbertPoly> hilbert;  // absent for Boundary, where J is not ample
};
SlopeAndHilbert slope_and_hilbert(const RuledSurface& S, const ChernCharacter& g, const Polarization& J);

// gamma-suitability of J_{m,n}
struct SuitabilityResult {
  bool suitable = true;
  std::optional<DivisorClass> witness;
};
SuitabilityResult is_suitable(const RuledSurface& S, const Mixed& J, const ChernCharacter& g);

}  // namespace dtr
