#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/matrix.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/transform.hpp"

namespace hurwitz {

/// Coefficient matrix 2 H(u; c) eps of the one-forms Omega = (omega_0, ..., omega_{2m-1}).
Matrix omega_matrix(const TransformSpec& spec, const Element& u);

/// Omega(du) = 2 H(u; c) (eps (.) du). Requires N = 1.
Element omega(const TransformSpec& spec, const Element& u, const Element& du);

/// Rows of Omega that constrain du: the vanishing components of the map.
std::vector<int> constraint_rows(const TransformSpec& spec);

/// Basis of {du : omega_i(du) = 0 for every constraint row i}.
std::vector<Element> constraint_kernel(const TransformSpec& spec, const Element& u);

/// Returns (Omega^T eta Omega, 4 r du^T eta du); throws IdentityViolation if they differ.
std::pair<Rational, Rational> verify_one_form_norm(const TransformSpec& spec, const Element& u,
                                                   const Element& du);

/// 4 r du^T eta du, after checking it equals sum over surviving alpha of
/// eta_alpha Omega_alpha^2. Throws ConstraintViolation if du breaks a constraint.
Rational line_element_reduction(const TransformSpec& spec, const Element& u, const Element& du);

/// Checks that each non-vanishing row of 2 H(u) eps is the gradient of
/// u^T M_alpha u, as polynomial identities. Throws IdentityViolation.
void verify_total_differentials(const TransformSpec& spec);

struct IdentityCheck {
  std::string relation;
  std::string method;  // "exact" or "finite-difference"
  std::string lhs;
  std::string rhs;
  double relative_error = 0.0;
  bool passed = false;
};

struct PowerMapReport {
  int c1;
  int n;
  Element u;
  Element x;
  std::vector<IdentityCheck> checks;

  bool passed() const;
};

/// The five relations of the dimension-2 map x = H(u)^N u: norm power,
/// Jacobian (N+1) H^N, line-element scaling, gradient transformation and the
/// factorised wave operator applied to test_fn(x0, x1).
/// Polynomial cases are exact; N < 0 uses central differences for the
/// Jacobian-based relations and throws ToleranceExceeded beyond 1e-6.
PowerMapReport verify_power_map(int c1, int n, const Element& u, const Polynomial& test_fn);

/// Jacobian of u -> H(u)^N u equals (N+1) H(u)^N as a polynomial-matrix
/// identity (dimension 2, N >= 0).
bool power_map_jacobian_identity(int c1, int n);

/// {1, x0, x1, x0^2, x0 x1, x0^2 - c1 x1^2} in variables x0, x1.
std::vector<Polynomial> standard_test_functions(int c1);

}  // namespace hurwitz
