#include <random>

#include "doctest.h"
#include "dtr/errors.hpp"
#include "dtr/geometry/surface.hpp"

using namespace dtr;

namespace {

Rational dot(const RuledSurface& S, const DivisorClass& a, const DivisorClass& b) { return intersect(S, a, b); }

ChernCharacter random_character(std::mt19937& rng) {
  std::uniform_int_distribution<int> rank(1, 3), c(-3, 3), two(-8, 8);
  return ChernCharacter(rank(rng), c(rng), c(rng), make_rational(two(rng), 2));
}

}  // namespace

TEST_CASE("intersection form") {
  const auto C = DivisorClass::C();
  const auto f = DivisorClass::f();
  CHECK(dot(RuledSurface(0, 2), C, C) == -2);
  CHECK(dot(RuledSurface(0, 2), f, f) == 0);
  CHECK(dot(RuledSurface(0, 2), C, f) == 1);
  DivisorClass D = C + f * Rational(2);
  CHECK(dot(RuledSurface(1, 1), D, D) == 3);
  CHECK_THROWS_AS(RuledSurface(-1, 0), InvalidInput);
}

TEST_CASE("canonical class") {
  RuledSurface S(1, 3);
  DivisorClass K = canonical_class(S);
  CHECK(K.cC == -2);
  CHECK(K.cf == Rational(2 * 1 - 2 - 3));
  // K^2 = 8 (1 - g) on a ruled surface
  CHECK(dot(S, K, K) == 0);
  CHECK(dot(RuledSurface(0, 1), canonical_class(RuledSurface(0, 1)), canonical_class(RuledSurface(0, 1))) == 8);
}

TEST_CASE("Euler pairing") {
  CHECK(euler_pairing(RuledSurface(0, 0), ChernCharacter(1, 0, 0, 0), ChernCharacter(1, 0, 0, 0)) == 1);
  ChernCharacter g(2, 0, 0, 2);
  for (int d = 0; d <= 3; ++d) CHECK(euler_pairing(RuledSurface(0, d), g, g) == -4);
}

TEST_CASE("discriminant") {
  RuledSurface S(0, 1);
  CHECK(discriminant(S, ChernCharacter(2, 0, 0, 2)) == 1);
  CHECK(discriminant(S, ChernCharacter(3, 0, 0, 3)) == 1);
  // line bundles have Delta = 0
  for (int b = -2; b <= 2; ++b) {
    for (int a = -2; a <= 2; ++a) {
      CHECK(discriminant(S, ChernCharacter::from_gamma2(S, 1, b, a, ChernCharacter(1, b, a, 0).c1_squared(S) / 2)) == 0);
    }
  }
}

TEST_CASE("moduli dimension") {
  for (int d = 0; d <= 3; ++d) {
    CHECK(dim_moduli(RuledSurface(0, d), ChernCharacter(2, 0, 0, 2)) == 5);
    CHECK(dim_moduli(RuledSurface(0, d), ChernCharacter(3, 0, 0, 3)) == 10);
    CHECK(dim_moduli(RuledSurface(0, d), ChernCharacter(1, 0, 0, 0)) == 0);
  }
  CHECK(dim_moduli(RuledSurface(2, 0), ChernCharacter(2, 0, 0, 0)) == 5);
  CHECK_THROWS_AS(dim_moduli(RuledSurface(0, 0), ChernCharacter(2, 0, 0, 0)), InvalidInput);
}

TEST_CASE("random character identities") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> gen(0, 2), deg(0, 3), tw(-3, 3);
  for (int i = 0; i < 200; ++i) {
    RuledSurface S(gen(rng), deg(rng));
    ChernCharacter a = random_character(rng);
    ChernCharacter b = random_character(rng);
    const DivisorClass K = canonical_class(S);

    DivisorClass skew = a.c1() * Rational(b.r) - b.c1() * Rational(a.r);
    CHECK(antisymmetric_pairing(S, a, b) == dot(S, skew, K));

    CHECK(euler_pairing(S, a, a) / (a.r * a.r) == -2 * discriminant(S, a) + S.chi_O());

    DivisorClass L = DivisorClass::from_beta_alpha(tw(rng), tw(rng));
    CHECK(discriminant(S, twist(S, a, L)) == discriminant(S, a));

    ChernCharacter sum = ChernCharacter::from_gamma2(S, a.r + b.r, a.beta + b.beta, a.alpha + b.alpha,
                                                     a.gamma2(S) + b.gamma2(S));
    CHECK(delta_of_filtration(S, {a, b}) == sum.r * discriminant(S, sum));
    CHECK(delta_of_filtration(S, {a}) == a.r * discriminant(S, a));
  }
}

TEST_CASE("filtration with proportional parts has no correction") {
  RuledSurface S(0, 0);
  ChernCharacter a(1, 1, -1, 2), b(1, 1, -1, 3);
  CHECK(delta_of_filtration(S, {a, b}) == discriminant(S, a) + discriminant(S, b));
  ChernCharacter p(1, 1, 1, 0), q(1, -1, -1, 0);
  ChernCharacter sum = ChernCharacter::from_gamma2(S, 2, 0, 0, p.gamma2(S) + q.gamma2(S));
  CHECK(delta_of_filtration(S, {p, q}) == 2 * discriminant(S, sum));
}

TEST_CASE("skew pairing vanishes at equal slope for the anticanonical polarization") {
  for (int d = 0; d <= 1; ++d) {
    RuledSurface S(0, d);
    for (int b = -3; b <= 3; ++b) {
      for (int a = -3; a <= 3; ++a) {
        ChernCharacter g(1, b, a, 0), h(2, 0, 0, 1);
        if (slope(S, AntiCanonical{}, 1, b, a) == slope(S, AntiCanonical{}, 2, 0, 0)) {
          CHECK(antisymmetric_pairing(S, g, h) == 0);
        }
      }
    }
  }
}

TEST_CASE("slopes and reduced Hilbert polynomials") {
  RuledSurface S(0, 0);
  for (const Polarization& J : {Polarization(Boundary{}), Polarization(Suitable{}), Polarization(Mixed{6, 5}),
                                Polarization(AntiCanonical{})}) {
    CHECK(slope_and_hilbert(S, ChernCharacter(2, 0, 0, 3), J).mu == 0);
  }
  auto sh = slope_and_hilbert(S, ChernCharacter(2, 0, 0, 1), Mixed{1, 1});
  REQUIRE(sh.hilbert);
  // J = C + f on Sigma_{0,0}: J^2 = 2
  CHECK(sh.hilbert->a2 == 1);
  CHECK_FALSE(slope_and_hilbert(S, ChernCharacter(2, 0, 0, 1), Boundary{}).hilbert);

  auto p1 = slope_and_hilbert(S, ChernCharacter(1, 1, 0, 1), Mixed{2, 3});
  auto p2 = slope_and_hilbert(S, ChernCharacter(2, 2, 0, 2), Mixed{2, 3});
  CHECK(p1.mu == p2.mu);
  CHECK(*p1.hilbert == *p2.hilbert);

  // J_{eps,1}: ties in gamma_1 . f are broken by gamma_1 . (C + d f)
  CHECK(slope(S, Suitable{}, 1, 0, 1) < slope(S, Suitable{}, 1, 0, 0));
}

TEST_CASE("polarizations") {
  CHECK(std::holds_alternative<Suitable>(parse_polarization("suitable")));
  CHECK(std::holds_alternative<Boundary>(parse_polarization("boundary")));
  CHECK(std::holds_alternative<AntiCanonical>(parse_polarization("anticanonical")));
  CHECK(std::get<Mixed>(parse_polarization("6,5")) == Mixed{6, 5});
  CHECK(std::get<Mixed>(parse_polarization("1/2, 3")) == Mixed{make_rational(1, 2), 3});
  CHECK(to_string(parse_polarization("6,5")) == "6,5");
  CHECK_THROWS_AS(parse_polarization("0,1"), InvalidInput);
  CHECK_THROWS_AS(parse_polarization("banana"), InvalidInput);
  CHECK_THROWS_AS(validate_polarization(RuledSurface(1, 0), AntiCanonical{}), InvalidInput);
  CHECK_THROWS_AS(validate_polarization(RuledSurface(0, 2), AntiCanonical{}), InvalidInput);
  CHECK(anticanonical_as_mixed(RuledSurface(0, 1)) == Mixed{2, 1});
  // -K = 2C + (2 + d) f
  DivisorClass J = polarization_class(RuledSurface(0, 1), AntiCanonical{});
  DivisorClass minusK = canonical_class(RuledSurface(0, 1)) * Rational(-1);
  CHECK(J == minusK);
}

TEST_CASE("suitability") {
  ChernCharacter g(2, 0, 0, 2);
  CHECK(is_suitable(RuledSurface(0, 0), Mixed{1, 100}, g).suitable);
  auto bad = is_suitable(RuledSurface(0, 0), Mixed{1, 1}, g);
  CHECK_FALSE(bad.suitable);
  REQUIRE(bad.witness);
  CHECK(dot(RuledSurface(0, 0), *bad.witness, *bad.witness) < 0);
  // J_{6,5} on Sigma_{1,0} is suitable at c2 = 1 only; the rank 2 tables for
  // J_{6,5} and J_{eps,1} differ from c2 = 2 on
  CHECK(is_suitable(RuledSurface(1, 0), Mixed{6, 5}, ChernCharacter(2, 0, 0, 1)).suitable);
  CHECK_FALSE(is_suitable(RuledSurface(1, 0), Mixed{6, 5}, ChernCharacter(2, 0, 0, 2)).suitable);
  CHECK(is_suitable(RuledSurface(1, 0), Mixed{1, 100}, ChernCharacter(2, 0, 0, 3)).suitable);
  CHECK_THROWS_AS(is_suitable(RuledSurface(0, 0), Mixed{0, 1}, g), InvalidInput);
}
