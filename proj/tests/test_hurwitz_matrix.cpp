#include <doctest.h>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_matrix.hpp"
#include "support.hpp"

using namespace hurwitz;
using test::el;

TEST_CASE("hurwitz matrix examples") {
  const Matrix h = hurwitz_matrix(el({5, 7}), Signature(2, {-1}));
  CHECK(h(0, 0) == 5);
  CHECK(h(0, 1) == -7);
  CHECK(h(1, 0) == 7);
  CHECK(h(1, 1) == 5);

  for (const auto& sig : all_signatures()) {
    CHECK(hurwitz_matrix(Element::unit(sig.dim()), sig) == Matrix::identity(static_cast<std::size_t>(sig.dim())));
  }

  const Matrix e7 = hurwitz_matrix(Element::basis(8, 7), Signature(8, {-1, -1, -1}));
  CHECK(Element(e7.column(0)) == Element::basis(8, 7));
  CHECK(e7(0, 7) == -1);
}

TEST_CASE("row 7 column 3 entry carries a minus sign") {
  const auto& e = template_entry(7, 3);
  CHECK(e.sign == -1);
  CHECK(e.u_index == 4);
}

TEST_CASE("basis matrices are signed permutations") {
  for (const auto& sig : all_signatures()) {
    const auto basis = hurwitz_basis(sig);
    for (std::size_t k = 1; k < basis.size(); ++k) {
      for (std::size_t i = 0; i < basis[k].rows(); ++i) {
        int row_nonzero = 0, col_nonzero = 0;
        for (std::size_t j = 0; j < basis[k].cols(); ++j) {
          if (basis[k](i, j) != 0) {
            ++row_nonzero;
            CHECK(abs(basis[k](i, j)) == 1);
          }
          if (basis[k](j, i) != 0) ++col_nonzero;
        }
        CHECK(row_nonzero == 1);
        CHECK(col_nonzero == 1);
      }
    }
  }
}

TEST_CASE("gamma examples") {
  const auto g = gamma_set(Signature(2, {-1})).gammas;
  REQUIRE(g.size() == 1);
  Matrix expected(2, 2);
  expected(0, 1) = 1;
  expected(1, 0) = -1;
  CHECK(g[0] == expected);
  CHECK(g[0] * g[0] == Rational(-1) * Matrix::identity(2));
  const auto gs = gamma_set(Signature(2, {1})).gammas;
  CHECK(gs[0] * gs[0] == Matrix::identity(2));
}

TEST_CASE("property 1 examples") {
  CHECK(verify_property1(Element::unit(4), Signature(4, {-1, 1})) == 1);
  const Signature q(4, {-1, -1});
  const Element u = el({1, 2, 3, 4});
  CHECK(verify_property1(u, q) == 30);
  const Matrix h = hurwitz_matrix(u, q);
  CHECK(h.transpose() * h == Rational(30) * Matrix::identity(4));
  CHECK(verify_property1(el({1, 1}), Signature(2, {1})) == 0);
}

TEST_CASE("powers") {
  const Signature c(2, {-1});
  CHECK(power(el({3, 2}), c, 0) == Matrix::identity(2));
  Matrix sq(2, 2);
  sq(0, 1) = -2;
  sq(1, 0) = 2;
  CHECK(power(el({1, 1}), c, 2) == sq);
  CHECK_THROWS_AS(power(el({1, 1}), Signature(2, {1}), -1), NullConeError);
  CHECK_THROWS_AS(hurwitz_inverse(el({1, 1}), Signature(2, {1})), NullConeError);
}

TEST_CASE("property: power law and inverse") {
  Sampler s(11);
  for (const auto& sig : all_signatures()) {
    for (int k = 0; k < 5; ++k) {
      const Element u = s.off_cone(sig);
      const auto d = static_cast<std::size_t>(sig.dim());
      CHECK(power(u, sig, -1) * hurwitz_matrix(u, sig) == Matrix::identity(d));
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) CHECK(power(u, sig, a) * power(u, sig, b) == power(u, sig, a + b));
      }
      const Element v = s.element(sig.dim());
      for (int n = -3; n <= 3; ++n) CHECK(power_apply(u, sig, n, v) == power(u, sig, n) * v);
    }
  }
}

TEST_CASE("property: multiplication agrees with the matrix") {
  Sampler s(12);
  for (const auto& sig : all_signatures()) {
    for (int k = 0; k < 20; ++k) {
      const Element u = s.element(sig.dim()), v = s.element(sig.dim());
      CHECK(multiply(u, v, sig) == hurwitz_matrix(u, sig) * v);
    }
  }
}
