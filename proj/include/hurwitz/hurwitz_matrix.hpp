#pragma once

#include <string>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/matrix.hpp"

namespace hurwitz {

/// One entry of the 8x8 template: sign * (product of the c_i in c_mask) * u_index.
/// Bit 0 of c_mask stands for c1, bit 1 for c2, bit 2 for c3.
struct TemplateEntry {
  int sign;
  unsigned c_mask;
  int u_index;
};

const TemplateEntry& template_entry(int row, int col);

/// H(u; c): the matrix of left multiplication by u. The 4x4 and 2x2 cases are
/// the top-left blocks of the 8x8 template.
Matrix hurwitz_matrix(const Element& u, const Signature& sig);

/// B_alpha with H(u; c) = sum_alpha u_alpha B_alpha; B_0 is the identity.
std::vector<Matrix> hurwitz_basis(const Signature& sig);

/// Clifford generators Gamma_1 .. Gamma_{2m-1}, Gamma_k = transpose(B_k).
struct GammaSet {
  std::vector<Matrix> gammas;
};

GammaSet gamma_set(const Signature& sig);

/// Checks H^T eta H = (u^T eta u) eta exactly and returns u^T eta u.
/// Throws IdentityViolation if the identity fails.
Rational verify_property1(const Element& u, const Signature& sig);

/// H^{-1} = r^{-1} eta H^T eta with r = u^T eta u. Throws NullConeError if r = 0.
Matrix hurwitz_inverse(const Element& u, const Signature& sig);

/// H(u; c)^n for any integer n. Negative n requires u off the null cone.
Matrix power(const Element& u, const Signature& sig, int n);

/// H(u; c)^n v by repeated matrix-vector products.
Element power_apply(const Element& u, const Signature& sig, int n, const Element& v);

/// Entry (row, col) rendered as a signed monomial, e.g. "-c1c2u3".
std::string symbolic_entry(int row, int col);

}  // namespace hurwitz
