#include <doctest.h>

#include "hurwitz/calculus.hpp"
#include "hurwitz/errors.hpp"
#include "support.hpp"

using namespace hurwitz;
using test::el;

TEST_CASE("omega at the unit is 2 eps du") {
  const TransformSpec ks = named(NamedTransform::KustaanheimoStiefel);
  CHECK(omega(ks, el({1, 0, 0, 0}), el({0, 1, 0, 0})) == el({0, -2, 0, 0}));
  CHECK(omega(ks, el({1, 0, 0, 0}), el({0, 0, 3, 0})) == el({0, 0, 6, 0}));
}

TEST_CASE("one-form norm examples") {
  const TransformSpec ks = named(NamedTransform::KustaanheimoStiefel);
  auto [lhs, rhs] = verify_one_form_norm(ks, el({1, 2, 3, 4}), el({1, 0, 0, 0}));
  CHECK(lhs == 120);
  CHECK(rhs == 120);

  std::tie(lhs, rhs) = verify_one_form_norm(ks, el({1, 0, 0, 0}), el({1, 0, 0, 0}));
  CHECK(lhs == 4);
  CHECK(rhs == 4);

  const TransformSpec split(1, Signature(2, {1}), SignVector::identity(2));
  std::tie(lhs, rhs) = verify_one_form_norm(split, el({1, 1}), el({3, -2}));
  CHECK(lhs == 0);
  CHECK(rhs == 0);
}

TEST_CASE("property: one-form norm for every signature and sign vector") {
  Sampler s(31);
  for (const auto& sig : all_signatures()) {
    for (int k = 0; k < 10; ++k) {
      const TransformSpec spec(1, sig, s.sign_vector(sig.dim()));
      const auto [lhs, rhs] = verify_one_form_norm(spec, s.element(sig.dim()), s.element(sig.dim()));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("constraint rows match the vanishing components") {
  for (const auto& sig : all_signatures()) {
    for (const auto& e : anti_involutions(sig)) {
      const TransformSpec spec(1, sig, e);
      CHECK(constraint_rows(spec) == quadratic_forms(spec).vanishing);
    }
  }
}

TEST_CASE("property: line element reduction in the constraint kernel") {
  Sampler s(32);
  const std::vector<TransformSpec> specs{
      named(NamedTransform::KustaanheimoStiefel), named(NamedTransform::Iwai),
      named(NamedTransform::LambertKibler),
      closed_form_spec(ClosedForm::TypeBSubalgebra, Signature(8, {-1, -1, -1})),
      closed_form_spec(ClosedForm::TypeBSubalgebra, Signature(8, {1, -1, 1}))};
  for (const auto& spec : specs) {
    for (int k = 0; k < 10; ++k) {
      const Element u = s.off_cone(spec.sig);
      const auto basis = constraint_kernel(spec, u);
      CHECK(static_cast<int>(basis.size()) == spec.sig.dim() - static_cast<int>(constraint_rows(spec).size()));
      Element du = Element::zero(spec.sig.dim());
      for (const auto& b : basis) du = du + s.rational() * b;
      const Rational ds2 = line_element_reduction(spec, u, du);
      CHECK(ds2 == 4 * norm_form(u, spec.sig) * norm_form(du, spec.sig));
    }
  }
}

TEST_CASE("line element rejects constraint violations") {
  const TransformSpec ks = named(NamedTransform::KustaanheimoStiefel);
  CHECK_THROWS_AS(line_element_reduction(ks, el({1, 2, 3, 4}), el({0, 1, 0, 0})), ConstraintViolation);
}

TEST_CASE("surviving one-forms are total differentials") {
  for (const auto& sig : all_signatures()) {
    for (const auto& e : anti_involutions(sig)) CHECK_NOTHROW(verify_total_differentials(TransformSpec(1, sig, e)));
  }
  CHECK_NOTHROW(verify_total_differentials(TransformSpec(1, Signature(2, {-1}), SignVector::identity(2))));
  CHECK_THROWS_AS(verify_total_differentials(TransformSpec(1, Signature(4, {-1, -1}), SignVector::identity(4))),
                  IdentityViolation);
}

TEST_CASE("power map Jacobian identity") {
  for (int c1 : {-1, 1}) {
    for (int n = 0; n <= 3; ++n) CHECK(power_map_jacobian_identity(c1, n));
  }
}

TEST_CASE("power map reports") {
  const auto fns = standard_test_functions(-1);
  const PowerMapReport harmonic = verify_power_map(-1, 1, el({1, 2}), fns[1]);
  CHECK(harmonic.passed());
  CHECK(harmonic.checks.size() == 5);

  const PowerMapReport cubic = verify_power_map(1, 2, el({2, 1}), standard_test_functions(1)[4]);
  CHECK(cubic.passed());
  for (const auto& c : cubic.checks) CHECK(c.method == "exact");
}

TEST_CASE("property: wave operator factorisation") {
  Sampler s(33);
  for (int c1 : {-1, 1}) {
    const Signature sig(2, {c1});
    for (int n : {1, 2}) {
      for (const auto& f : standard_test_functions(c1)) {
        for (int k = 0; k < 5; ++k) CHECK(verify_power_map(c1, n, s.off_cone(sig), f).passed());
      }
    }
  }
}

TEST_CASE("negative powers use finite differences") {
  const PowerMapReport r = verify_power_map(-1, -2, el({1, 2}), standard_test_functions(-1)[3]);
  CHECK(r.passed());
  bool fd = false;
  for (const auto& c : r.checks) fd = fd || c.method == "finite-difference";
  CHECK(fd);
  CHECK_THROWS_AS(verify_power_map(1, -2, el({1, 1}), standard_test_functions(1)[0]), NullConeError);
  CHECK_THROWS_AS(verify_power_map(-1, -1, el({1, 2}), standard_test_functions(-1)[0]), InvalidArgument);
}
