#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// T[N; c; eps]: u -> H(u; c)^N (eps (.) u). N = 1 is the quadratic case.
struct TransformSpec {
  TransformSpec(int n, Signature sig, SignVector eps);

  int n;
  Signature sig;
  SignVector eps;
};

std::string to_string(const TransformSpec& spec);

enum class TransformKind { A, B, C };

struct TransformType {
  TransformKind kind;
  /// Set for kind B: 0 for the conjugation j0, k >= 1 for the k-th
  /// subalgebra conjugation in anti_involutions() order.
  std::optional<int> j_index;

  std::string label(int n = 1) const;
};

/// A: eps is the identity. B: eps is an anti-involution. C: anything else.
TransformType classify(const Signature& sig, const SignVector& eps);

/// x = H(u; c)^N (eps (.) u), as a full dim-length vector (vanishing slots included).
Element apply(const TransformSpec& spec, const Element& u);

/// Exact symmetric matrices M_alpha with x_alpha = u^T M_alpha u (N = 1 only).
struct QuadraticFormMap {
  std::vector<Matrix> forms;
  std::vector<int> vanishing;

  int n() const { return static_cast<int>(vanishing.size()); }
  Element evaluate(const Element& u) const;
};

QuadraticFormMap quadratic_forms(const TransformSpec& spec);

/// Numerators of x as polynomials in u_0..u_{dim-1}. For N < 0 the common
/// denominator is (u^T eta u)^{-N}.
std::vector<Polynomial> transform_polynomials(const TransformSpec& spec);

/// Components that vanish identically, for any N (exact polynomial test).
std::vector<int> vanishing_components(const TransformSpec& spec);

/// Drops the listed slots: the R^{2m-n} view of x.
Element compress(const Element& x, std::span<const int> vanishing);

/// Returns (x^T eta x, (u^T eta u)^{N+1}); throws IdentityViolation if they differ.
std::pair<Rational, Rational> verify_norm_power(const TransformSpec& spec, const Element& u);

/// Hand-expanded component formulas for the standard quadratic maps and the
/// Fock projection, evaluated term by term.
enum class ClosedForm {
  TypeA,              // eps = 1: R^8 -> R^8
  TypeBSubalgebra,    // eps = diag(1,-1,1,1,1,1,-1,-1): R^8 -> R^5
  TypeBConjugation,   // eps = j0: R^8 -> R
  TypeC,              // eps = diag(1,-1,-1,-1,-1,-1,1,1): R^8 -> R^7
  Fock,               // N = -1, dim 4, eps = diag(1,-1,1,1)
};

/// The dimension-8 forms also accept dimension 4 and 2 signatures: the
/// missing u components and c parameters are taken as zero.
Element closed_form(ClosedForm form, const Signature& sig, const Element& u);

/// The transform whose apply() the closed form expands.
TransformSpec closed_form_spec(ClosedForm form, const Signature& sig);

enum class NamedTransform { LeviCivita, KustaanheimoStiefel, Iwai, LambertKibler, Fock };

/// lambert_kibler_both_positive selects the c1 = c2 = 1 variant.
TransformSpec named(NamedTransform name, bool lambert_kibler_both_positive = false);

/// Equal up to a permutation of output components and a sign flip per component.
bool equivalent(const QuadraticFormMap& a, const QuadraticFormMap& b);

/// u^T M u written as a polynomial in u0, u1, ...
std::string form_to_string(const Matrix& m);

}  // namespace hurwitz
