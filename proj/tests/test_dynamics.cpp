#include <doctest.h>

#include "hurwitz/dynamics.hpp"
#include "hurwitz/errors.hpp"

using namespace hurwitz;

TEST_CASE("admissible pairs") {
  const std::vector<AdmissiblePair> expected{{0, 0, true}, {1, 1, false}, {3, -3, false}, {4, -2, false}};
  CHECK(admissible_pairs(-10, 10) == expected);
  CHECK(admissible_pairs(2, 2).empty());
  CHECK(admissible_pairs(1, 1) == std::vector<AdmissiblePair>{{1, 1, false}});
  CHECK(admissible_pairs(-1000, 1000) == expected);
}

TEST_CASE("exponent for alpha") {
  CHECK(exponent_for(Rational(1)) == 1);
  CHECK(exponent_for(Rational(4)) == -2);
  CHECK_FALSE(exponent_for(Rational(2)).has_value());
  CHECK_FALSE(exponent_for(Rational(-2)).has_value());
  CHECK_FALSE(exponent_for(Rational(5)).has_value());
}

TEST_CASE("duality examples") {
  const Rational z(3, 2);
  const Rational e(-1, 4);
  const DualityResult coulomb = dualize(Rational(1), 1, z, e);
  CHECK(coulomb.new_potential_exponent == 2);
  CHECK(coulomb.new_potential_coefficient == -4 * e);
  CHECK(coulomb.new_eigenvalue == 4 * z);
  CHECK(coulomb.roles_swapped);

  const DualityResult four = dualize(Rational(4), -2, z, e);
  CHECK(four.new_potential_exponent == -4);
  CHECK(four.new_potential_coefficient == -e);
  CHECK(four.new_eigenvalue == z);

  const DualityResult three = dualize(Rational(3), -3, z, e);
  CHECK(three.new_potential_exponent == -6);
  CHECK(three.new_potential_coefficient == -4 * e);
  CHECK(three.new_eigenvalue == 4 * z);
}

TEST_CASE("inadmissible pairs") {
  CHECK_THROWS_AS(dualize(Rational(2), 1, Rational(1), Rational(1)), InadmissiblePair);
  CHECK_THROWS_AS(dualize(Rational(1), -1, Rational(1), Rational(1)), InadmissiblePair);
}

TEST_CASE("the oscillator has no integer dual") { CHECK_FALSE(exponent_for(Rational(-2)).has_value()); }
