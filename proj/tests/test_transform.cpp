#include <doctest.h>

#include <algorithm>

#include "hurwitz/errors.hpp"
#include "hurwitz/fibration.hpp"
#include "hurwitz/transform.hpp"
#include "support.hpp"

using namespace hurwitz;
using test::el;

TEST_CASE("classification") {
  const Signature q(4, {-1, -1});
  CHECK(classify(q, SignVector::identity(4)).kind == TransformKind::A);
  const TransformType j0 = classify(q, SignVector::conjugation(4));
  CHECK(j0.kind == TransformKind::B);
  CHECK(*j0.j_index == 0);
  CHECK(classify(q, SignVector({1, -1, 1, 1})).kind == TransformKind::B);
  CHECK(classify(q, SignVector({1, -1, -1, 1})).kind == TransformKind::C);
  CHECK_THROWS_AS(classify(q, SignVector({1, -1})), DimensionMismatch);
  CHECK(classify(q, SignVector({1, 1, -1, 1})).label() == "B1 (j2)");
}

TEST_CASE("named transforms") {
  const Element x = apply(named(NamedTransform::KustaanheimoStiefel), el({1, 1, 1, 1}));
  CHECK(x == el({0, 0, 0, 4}));
  CHECK(vanishing_components(named(NamedTransform::KustaanheimoStiefel)) == std::vector<int>{1});

  CHECK(apply(named(NamedTransform::LeviCivita), el({2, 1})) == el({3, 4}));
  CHECK(named(NamedTransform::Iwai).sig == Signature(4, {-1, 1}));
  CHECK(named(NamedTransform::LambertKibler).sig == Signature(4, {1, -1}));
  CHECK(named(NamedTransform::LambertKibler, true).sig == Signature(4, {1, 1}));

  const TransformSpec fock = named(NamedTransform::Fock);
  Sampler s(21);
  for (int k = 0; k < 50; ++k) {
    const Element u = s.off_cone(fock.sig);
    CHECK(norm_form(apply(fock, u), fock.sig) == 1);
  }
}

TEST_CASE("property: forms reproduce apply") {
  Sampler s(22);
  for (const auto& sig : all_signatures()) {
    for (const auto& e : all_sign_vectors(sig.dim())) {
      const TransformSpec spec(1, sig, e);
      const QuadraticFormMap forms = quadratic_forms(spec);
      CHECK(forms.n() == static_cast<int>(vanishing_components(spec).size()));
      CHECK(forms.n() <= sig.dim() - 1);
      for (const auto& m : forms.forms) CHECK(m.is_symmetric());
      for (int k = 0; k < 3; ++k) {
        const Element u = s.element(sig.dim());
        CHECK(forms.evaluate(u) == apply(spec, u));
      }
    }
  }
}

TEST_CASE("vanishing counts") {
  for (const auto& sig : all_signatures()) {
    const int d = sig.dim();
    CHECK(vanishing_components(TransformSpec(1, sig, SignVector::identity(d))).empty());
    CHECK(static_cast<int>(vanishing_components(TransformSpec(1, sig, SignVector::conjugation(d))).size()) == d - 1);
    const auto list = anti_involutions(sig);
    for (std::size_t k = 1; k < list.size(); ++k) {
      const auto van = vanishing_components(TransformSpec(1, sig, list[k]));
      CHECK(van.size() == (d == 4 ? 1u : 3u));
      CHECK(van == list[k].flipped());
    }
  }
}

TEST_CASE("vanishing components for other powers") {
  const Signature q(4, {-1, -1});
  CHECK(vanishing_components(TransformSpec(1, q, SignVector({1, -1, 1, 1}))) == std::vector<int>{1});
  CHECK(vanishing_components(TransformSpec(2, q, SignVector({1, -1, 1, 1}))).empty());
  CHECK(vanishing_components(TransformSpec(0, q, SignVector({1, -1, 1, 1}))).empty());
}

TEST_CASE("property: norm power for all powers") {
  Sampler s(23);
  for (const auto& sig : all_signatures()) {
    for (int n = -3; n <= 3; ++n) {
      const TransformSpec spec(n, sig, s.sign_vector(sig.dim()));
      const Element u = s.off_cone(sig);
      const auto [lhs, rhs] = verify_norm_power(spec, u);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("property: homogeneity of degree N + 1") {
  Sampler s(24);
  for (const auto& sig : all_signatures()) {
    for (int n = -2; n <= 3; ++n) {
      const TransformSpec spec(n, sig, s.sign_vector(sig.dim()));
      const Element u = s.off_cone(sig);
      const Rational t = s.rational() + 10;
      CHECK(apply(spec, t * u) == pow(t, n + 1) * apply(spec, u));
    }
  }
}

TEST_CASE("closed forms agree with apply") {
  Sampler s(25);
  for (const auto& sig : all_signatures()) {
    for (ClosedForm f : {ClosedForm::TypeA, ClosedForm::TypeBSubalgebra, ClosedForm::TypeBConjugation,
                         ClosedForm::TypeC, ClosedForm::Fock}) {
      if (f == ClosedForm::Fock && sig.dim() != 4) {
        CHECK_THROWS_AS(closed_form(f, sig, Element::unit(sig.dim())), DimensionMismatch);
        continue;
      }
      const TransformSpec spec = closed_form_spec(f, sig);
      for (int k = 0; k < 20; ++k) {
        const Element u = s.off_cone(sig);
        CHECK(closed_form(f, sig, u) == apply(spec, u));
      }
    }
  }
}

TEST_CASE("property: restriction to lower dimensions") {
  Sampler s(26);
  const TransformSpec spec8(1, Signature(8, {-1, 1, -1}), SignVector::identity(8));
  const TransformSpec spec4(1, Signature(4, {-1, 1}), SignVector::identity(4));
  const TransformSpec spec2(1, Signature(2, {-1}), SignVector::identity(2));
  for (int k = 0; k < 20; ++k) {
    Element u4 = s.element(4);
    Element u8 = Element::zero(8);
    for (int i = 0; i < 4; ++i) u8[i] = u4[i];
    const Element x8 = apply(spec8, u8);
    const Element x4 = apply(spec4, u4);
    for (int i = 0; i < 4; ++i) CHECK(x8[i] == x4[i]);
    for (int i = 4; i < 8; ++i) CHECK(x8[i] == 0);

    const Element u2{u4[0], u4[1]};
    Element u4r = Element::zero(4);
    u4r[0] = u4[0];
    u4r[1] = u4[1];
    const Element x2 = apply(spec2, u2);
    const Element x4r = apply(spec4, u4r);
    CHECK(x4r[0] == x2[0]);
    CHECK(x4r[1] == x2[1]);
  }
}

TEST_CASE("compress drops vanishing slots") {
  CHECK(compress(el({0, 0, 0, 4}), std::vector<int>{1}) == el({0, 0, 4}));
}

TEST_CASE("equivalence of form maps") {
  const Signature oct(8, {-1, -1, -1});
  const auto list = anti_involutions(oct);
  const auto base = quadratic_forms(TransformSpec(1, oct, list[1]));
  for (std::size_t k = 2; k < list.size(); ++k) {
    const auto other = quadratic_forms(TransformSpec(1, oct, list[k]));
    CHECK(other.n() == base.n());
  }
  const auto a = quadratic_forms(TransformSpec(1, oct, SignVector::identity(8)));
  CHECK(equivalent(a, a));
  CHECK_FALSE(equivalent(a, base));
  QuadraticFormMap flipped = a;
  std::swap(flipped.forms[1], flipped.forms[2]);
  flipped.forms[3] = Rational(-1) * flipped.forms[3];
  CHECK(equivalent(a, flipped));
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(TransformSpec(1, Signature(4, {-1, -1}), SignVector::identity(2)), DimensionMismatch);
  CHECK_THROWS_AS(quadratic_forms(TransformSpec(2, Signature(2, {-1}), SignVector::identity(2))), InvalidArgument);
  CHECK_THROWS_AS(apply(named(NamedTransform::KustaanheimoStiefel), el({1, 2})), DimensionMismatch);
  CHECK_THROWS_AS(apply(TransformSpec(-1, Signature(2, {1}), SignVector::identity(2)), el({2, 2})), NullConeError);
}

TEST_CASE("fibration examples") {
  const FibrationInfo ks = fibration(named(NamedTransform::KustaanheimoStiefel));
  CHECK(ks.name == "S³ → S²");
  CHECK(ks.fiber == "S¹");
  CHECK(ks.L == "sp(8,ℝ)");
  CHECK(ks.L0 == "so(2)");
  CHECK(ks.L1 == "so(4,2)");

  const Signature oct(8, {-1, -1, -1});
  const FibrationInfo b = fibration(closed_form_spec(ClosedForm::TypeBSubalgebra, oct));
  CHECK(b.name == "S⁷ → S⁴");
  CHECK(b.fiber == "S³");
  CHECK(b.L0 == "so(3)");
  CHECK(b.L1 == "so(6,2)");

  const FibrationInfo hopf = fibration(closed_form_spec(ClosedForm::TypeC, oct));
  CHECK(hopf.name == "S⁷ → ℂP³");
  CHECK(hopf.fiber == "S¹");
}

TEST_CASE("fibration of the split quaternion maps") {
  CHECK(fibration(named(NamedTransform::Iwai)).compactness == Compactness::NoncompactCompactFiber);
  const FibrationInfo lk = fibration(named(NamedTransform::LambertKibler));
  CHECK(lk.compactness == Compactness::NoncompactNoncompactFiber);
  CHECK(lk.L1 == "so(3,3)");
  CHECK(lk.fiber == "ℝ");
}

TEST_CASE("fibration prose classes") {
  const FibrationInfo lc = fibration(named(NamedTransform::LeviCivita));
  CHECK(lc.name == "S¹ → ℝP¹");
  CHECK(lc.fiber == "Z₂");
  CHECK(lc.L.empty());
  const FibrationInfo lc_dim2 = fibration(TransformSpec(1, Signature(2, {-1}), SignVector::conjugation(2)));
  CHECK(lc_dim2.name == "S¹ → {1}");
  const FibrationInfo split_a = fibration(TransformSpec(1, Signature(4, {1, 1}), SignVector::identity(4)));
  CHECK(split_a.name == "H³(2,2) → H³(2,2)/Z₂");
  const FibrationInfo split_j0 = fibration(TransformSpec(1, Signature(8, {1, 1, 1}), SignVector::conjugation(8)));
  CHECK(split_j0.fiber == "ℝ⁴ × S³");
}

TEST_CASE("unclassified fibrations") {
  const Signature q(4, {-1, -1});
  CHECK_THROWS_AS(fibration(TransformSpec(2, q, SignVector::identity(4))), UnclassifiedSpec);
  CHECK_THROWS_AS(fibration(TransformSpec(1, q, SignVector({1, -1, -1, 1}))), UnclassifiedSpec);
  CHECK_THROWS_AS(fibration_table_lookup(6, Compactness::Compact), UnclassifiedSpec);
}

TEST_CASE("fibration table has eight rows keyed by dimension and class") {
  const auto& rows = fibration_table();
  CHECK(rows.size() == 8);
  for (const auto& r : rows) CHECK(fibration_table_lookup(r.dim, r.info.compactness) == r.info);
}
