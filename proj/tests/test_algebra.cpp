#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hurwitz/algebra.hpp"
#include "hurwitz/errors.hpp"
#include "support.hpp"

using namespace hurwitz;
using test::el;

TEST_CASE("signatures") {
  CHECK(all_signatures().size() == 14);
  CHECK_THROWS_AS(Signature(4, {-1}), InvalidArgument);
  CHECK_THROWS_AS(Signature(3, {-1, 1}), InvalidArgument);
  CHECK_THROWS_AS(Signature(2, {0}), InvalidArgument);
  CHECK(Signature(8, {-1, 1, -1}).c(3) == -1);
  CHECK(Signature(2, {1}).c(2) == 0);
}

TEST_CASE("metric examples") {
  const Metric m2 = metric(Signature(2, {-1}));
  CHECK(m2.g == std::vector<int>{1});
  CHECK(m2.eta == std::vector<int>{1, 1});
  CHECK(m2.compact());

  const Metric m8 = metric(Signature(8, {-1, -1, -1}));
  CHECK(m8.g == std::vector<int>(7, 1));
  CHECK(m8.compact());

  const Metric split = metric(Signature(2, {1}));
  CHECK(split.eta == std::vector<int>{1, -1});
  CHECK(split.signature_sum == 0);
  CHECK_FALSE(split.compact());
}

TEST_CASE("metric signature is 2m or 0") {
  for (const auto& sig : all_signatures()) {
    const Metric m = metric(sig);
    CHECK((m.signature_sum == sig.dim() || m.signature_sum == 0));
  }
}

TEST_CASE("multiplication examples") {
  CHECK(multiply(el({0, 1}), el({0, 1}), Signature(2, {-1})) == el({-1, 0}));
  CHECK(multiply(el({0, 1}), el({0, 1}), Signature(2, {1})) == el({1, 0}));
  CHECK(multiply(el({0, 1, 0, 0}), el({0, 0, 1, 0}), Signature(4, {-1, -1})) == el({0, 0, 0, 1}));
}

TEST_CASE("conjugation and norm examples") {
  CHECK(conjugate(el({1, 0, 0, 0})) == el({1, 0, 0, 0}));
  CHECK(conjugate(el({3, 5})) == el({3, -5}));
  CHECK(norm_form(el({3, 4}), Signature(2, {-1})) == 25);
  CHECK(norm_form(el({1, 1}), Signature(2, {1})) == 0);
  const Signature s(8, {-1, -1, 1});
  const auto eta = metric(s).eta;
  CHECK(norm_form(el({1, 1, 1, 1, 1, 1, 1, 1}), s) == std::accumulate(eta.begin(), eta.end(), 0));
}

TEST_CASE("sign vectors") {
  CHECK_THROWS_AS(SignVector({-1, 1}), InvalidArgument);
  CHECK_THROWS_AS(SignVector({1, 2}), InvalidArgument);
  const SignVector e({1, -1, 1, 1});
  CHECK(e.tail_sum() == 1);
  CHECK(e.flipped() == std::vector<int>{1});
  CHECK(e.apply(el({1, 2, 3, 4})) == el({1, -2, 3, 4}));
  CHECK(e.to_string() == "diag(1,-1,1,1)");
}

TEST_CASE("anti-involution lists") {
  for (const auto& sig : all_signatures()) {
    const auto list = anti_involutions(sig);
    const int m = sig.dim() / 2;
    CHECK(static_cast<int>(list.size()) == 2 * m - (m == 1 ? 1 : 0));
    CHECK(list.front() == SignVector::conjugation(sig.dim()));
  }
  CHECK(anti_involutions(Signature(2, {-1})).front() == SignVector({1, -1}));
  const auto oct = anti_involutions(Signature(8, {1, -1, 1}));
  CHECK(std::find(oct.begin(), oct.end(), SignVector({1, -1, 1, 1, 1, 1, -1, -1})) != oct.end());
}

TEST_CASE("property: bilinearity") {
  Sampler s(1);
  for (const auto& sig : all_signatures()) {
    for (int k = 0; k < 20; ++k) {
      const Rational a = s.rational(), b = s.rational();
      const Element u = s.element(sig.dim()), u2 = s.element(sig.dim()), v = s.element(sig.dim());
      CHECK(multiply(a * u + b * u2, v, sig) == a * multiply(u, v, sig) + b * multiply(u2, v, sig));
      CHECK(multiply(v, a * u + b * u2, sig) == a * multiply(v, u, sig) + b * multiply(v, u2, sig));
    }
  }
}

TEST_CASE("property: norm composition") {
  Sampler s(2);
  for (const auto& sig : all_signatures()) {
    for (int k = 0; k < 50; ++k) {
      const Element u = s.element(sig.dim()), v = s.element(sig.dim());
      CHECK(norm_form(multiply(u, v, sig), sig) == norm_form(u, sig) * norm_form(v, sig));
    }
  }
}

TEST_CASE("property: conjugation reverses products of basis elements") {
  for (const auto& sig : all_signatures()) {
    const int d = sig.dim();
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        const Element ei = Element::basis(d, i), ej = Element::basis(d, j);
        CHECK(conjugate(multiply(ei, ej, sig)) == multiply(conjugate(ej), conjugate(ei), sig));
      }
    }
  }
}

TEST_CASE("property: associativity in dimensions 2 and 4") {
  for (const auto& sig : all_signatures()) {
    if (sig.dim() == 8) continue;
    const int d = sig.dim();
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        for (int k = 0; k < d; ++k) {
          const Element a = Element::basis(d, i), b = Element::basis(d, j), c = Element::basis(d, k);
          CHECK(multiply(multiply(a, b, sig), c, sig) == multiply(a, multiply(b, c, sig), sig));
        }
      }
    }
  }
}

TEST_CASE("property: dimension 8 is alternative but not associative") {
  Sampler s(3);
  bool saw_nonassociative = false;
  for (const auto& sig : all_signatures()) {
    if (sig.dim() != 8) continue;
    for (int k = 0; k < 20; ++k) {
      const Element u = s.element(8), v = s.element(8), w = s.element(8);
      CHECK(multiply(multiply(u, u, sig), v, sig) == multiply(u, multiply(u, v, sig), sig));
      CHECK(multiply(multiply(v, u, sig), u, sig) == multiply(v, multiply(u, u, sig), sig));
      if (multiply(multiply(u, v, sig), w, sig) != multiply(u, multiply(v, w, sig), sig)) saw_nonassociative = true;
    }
  }
  CHECK(saw_nonassociative);
}

TEST_CASE("property: unit") {
  Sampler s(4);
  for (const auto& sig : all_signatures()) {
    const Element one = Element::unit(sig.dim());
    const Element u = s.element(sig.dim());
    CHECK(multiply(one, u, sig) == u);
    CHECK(multiply(u, one, sig) == u);
  }
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(multiply(el({1, 2}), el({1, 2, 3, 4}), Signature(4, {-1, -1})), DimensionMismatch);
  CHECK_THROWS_AS(norm_form(el({1, 2, 3}), Signature(2, {-1})), DimensionMismatch);
}
