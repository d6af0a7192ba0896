#include <doctest.h>

#include <algorithm>

#include "hurwitz/errors.hpp"
#include "hurwitz/number_theory.hpp"
#include "hurwitz/transform.hpp"
#include "support.hpp"

using namespace hurwitz;
using test::ints;

namespace {

bool contains_key(const std::vector<SolutionTuple>& sols, const std::vector<Integer>& key) {
  return std::any_of(sols.begin(), sols.end(), [&](const SolutionTuple& s) { return s.values == key; });
}

}  // namespace

TEST_CASE("family identifiers") {
  for (Family f : all_families()) CHECK(parse_family(family_id(f)) == f);
  CHECK(parse_family("EQ43") == Family::TypeA2);
  CHECK_THROWS_AS(parse_family("EQ99"), InvalidArgument);
  CHECK(DiophantineFamily(Family::TypeA8, {-1, -1, -1}).arity() == 9);
  CHECK(DiophantineFamily(Family::TypeB8, {-1, -1, -1}).arity() == 6);
  CHECK(DiophantineFamily(Family::TypeC8, {-1, -1, -1}).arity() == 8);
  CHECK(DiophantineFamily(Family::TypeA4, {-1, -1}).arity() == 5);
  CHECK(DiophantineFamily(Family::TypeB4, {-1, -1}).arity() == 4);
  CHECK(DiophantineFamily(Family::TypeA2, {-1}).arity() == 3);
  CHECK(DiophantineFamily(Family::PowerNorm, {-1}, 2).arity() == 3);
  CHECK_THROWS_AS(DiophantineFamily(Family::TypeA2, {-1, 1}), InvalidArgument);
}

TEST_CASE("solutions from seeds") {
  const DiophantineFamily pyth(Family::Pythagorean);
  const auto a = solution_from_seed(pyth, ints({2, 0, 1, 0}));
  CHECK(a.values == ints({3, 4, 0, 5}));

  const auto b = solution_from_seed(DiophantineFamily(Family::TypeA2, {1}), ints({2, 1}));
  CHECK(b.values == ints({5, 4, 3}));

  const auto c = solution_from_seed(DiophantineFamily(Family::PowerNorm, {-1}, 2), ints({1, 1}));
  CHECK(c.values == ints({-2, 2, 2}));

  const auto d = solution_from_seed(DiophantineFamily(Family::TwiceSquare), ints({3, 0, 1, 1}));
  CHECK(d.values == ints({7, 6, 11}));

  CHECK_THROWS_AS(solution_from_seed(DiophantineFamily(Family::TwiceSquare), ints({3, 1, 1, 1})), ConstraintViolation);
  CHECK_THROWS_AS(solution_from_seed(pyth, ints({1, 2})), DimensionMismatch);
}

TEST_CASE("verification") {
  const DiophantineFamily pyth(Family::Pythagorean);
  CHECK(verify(pyth, ints({3, 4, 0, 5})));
  CHECK_FALSE(verify(pyth, ints({1, 1, 1, 2})));
  CHECK(verify(DiophantineFamily(Family::PowerNorm, {-1}, 2), ints({-2, 2, 2})));
  CHECK_THROWS_AS(verify(pyth, ints({3, 4, 5})), ArityMismatch);
}

TEST_CASE("generation examples") {
  const auto pyth = generate(DiophantineFamily(Family::Pythagorean), 2, {true, true});
  CHECK(contains_key(pyth, ints({3, 4, 0, 5})));
  const auto a2 = generate(DiophantineFamily(Family::TypeA2, {-1}), 2);
  CHECK(contains_key(a2, ints({3, 4, 5})));
  CHECK(generate(DiophantineFamily(Family::TypeA2, {-1}), 0).size() == 1);
  CHECK(generate(DiophantineFamily(Family::TypeA2, {-1}), 0, {true, false}).empty());
}

TEST_CASE("property: every generated tuple verifies") {
  for (Family f : all_families()) {
    std::vector<int> c(DiophantineFamily::parameter_count(f), -1);
    const DiophantineFamily fam(f, c, 3);
    const int bound = fam.seed_dim() == 8 ? 1 : 2;
    for (const auto& sol : generate(fam, bound)) CHECK(verify(fam, sol.values));
    for (const auto& sol : generate(fam, bound, {true, true})) {
      CHECK(verify(fam, sol.values));
      CHECK(sol.primitive);
    }
  }
}

TEST_CASE("property: homogeneity of degree two") {
  Sampler s(41);
  for (int c1 : {-1, 1}) {
    for (int c2 : {-1, 1}) {
      const DiophantineFamily fam(Family::TypeA4, {c1, c2});
      for (int k = 0; k < 20; ++k) {
        const auto seed = s.integers(4, 5);
        const Integer t = s.uniform_int(-4, 4);
        std::vector<Integer> scaled;
        for (const auto& v : seed) scaled.push_back(t * v);
        const auto lhs = solution_from_seed(fam, scaled).values;
        const auto rhs = solution_from_seed(fam, seed).values;
        for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(lhs[i] == t * t * rhs[i]);
      }
    }
  }
}

TEST_CASE("property: seeds agree with the transform") {
  Sampler s(42);
  for (int c1 : {-1, 1}) {
    for (int c2 : {-1, 1}) {
      for (int c3 : {-1, 1}) {
        const Signature sig(8, {c1, c2, c3});
        const DiophantineFamily fam(Family::TypeA8, {c1, c2, c3});
        for (int k = 0; k < 5; ++k) {
          const auto seed = s.integers(8, 4);
          std::vector<Rational> q(seed.begin(), seed.end());
          const Element u(q);
          const Element x = apply(TransformSpec(1, sig, SignVector::identity(8)), u);
          const auto values = solution_from_seed(fam, seed).values;
          for (int i = 0; i < 8; ++i) CHECK(Rational(values[i]) == x[i]);
          CHECK(Rational(values[8]) == norm_form(u, sig));
        }
      }
    }
  }
}

TEST_CASE("canonical keys") {
  const DiophantineFamily pyth(Family::Pythagorean);
  CHECK(canonical_key(pyth, ints({-3, 4, 0, -5})) == ints({3, 4, 0, 5}));
  const DiophantineFamily cube(Family::PowerNorm, {-1}, 2);
  CHECK(canonical_key(cube, ints({-2, 2, -2})) == ints({2, 2, -2}));
  const DiophantineFamily fourth(Family::PowerNorm, {-1}, 3);
  CHECK(canonical_key(fourth, ints({-2, 2, -2})) == ints({2, 2, 2}));
  CHECK(gcd(ints({6, -9, 12})) == 3);
  CHECK(gcd(ints({0, 0})) == 0);
}

TEST_CASE("constrained seeds") {
  const auto cons = seed_constraints(Family::TwiceSquare);
  const auto seeds = constrained_seeds(4, 1, cons);
  CHECK(seeds.size() == 9);
  for (const auto& s : seeds) {
    CHECK(s[1] == 0);
    CHECK(s[2] == s[3]);
  }
  CHECK(std::is_sorted(seeds.begin(), seeds.end()));
}

TEST_CASE("power norm with large exponents") {
  const DiophantineFamily fam(Family::PowerNorm, {-1}, 40);
  const auto sol = solution_from_seed(fam, ints({3, 7}));
  CHECK(sol.values[2] == 58);
  CHECK(verify(fam, sol.values));
  CHECK(sol.values[0].get_str().size() > 30);
}

TEST_CASE("generation is deterministic") {
  const DiophantineFamily fam(Family::TypeB4, {-1, 1});
  const auto a = generate(fam, 3, {true, true});
  const auto b = generate(fam, 3, {true, true});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].values == b[i].values);
    CHECK(a[i].seed == b[i].seed);
  }
}

TEST_CASE("property: composition of norms") {
  Sampler s(43);
  for (const auto& sig : all_signatures()) {
    for (int k = 0; k < 5; ++k) {
      const auto [w, u, v] = composition_identity(s.element(sig.dim()), s.element(sig.dim()), sig);
      CHECK(w == u * v);
    }
  }
}
