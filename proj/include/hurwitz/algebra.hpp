#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/scalar.hpp"

namespace hurwitz {

/// One of the fourteen Cayley-Dickson algebras A(c) of dimension 2, 4 or 8.
/// The sign list has log2(dim) entries, each +1 or -1.
class Signature {
 public:
  Signature(int dim, std::vector<int> c);

  int dim() const { return dim_; }
  const std::vector<int>& c() const { return c_; }
  /// c_i for i = 1, 2, 3; returns 0 for parameters absent at this dimension.
  int c(int i) const;

  /// "A(-1,1)" style label.
  std::string label() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  int dim_;
  std::vector<int> c_;
};

/// All 14 signatures: 2 of dimension 2, 4 of dimension 4, 8 of dimension 8.
std::vector<Signature> all_signatures();

/// Diagonal metric data. g has dim-1 entries, eta = (1) + g.
struct Metric {
  std::vector<int> g;
  std::vector<int> eta;
  int signature_sum = 0;

  bool compact() const { return signature_sum == static_cast<int>(eta.size()); }
};

Metric metric(const Signature& sig);

/// A hypercomplex number u = u0 + sum u_k e_k, stored as its coefficient vector.
class Element {
 public:
  Element() = default;
  explicit Element(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  Element(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {}

  static Element zero(int dim);
  static Element unit(int dim);
  static Element basis(int dim, int k);

  std::size_t size() const { return coeffs_.size(); }
  int dim() const { return static_cast<int>(coeffs_.size()); }
  Rational& operator[](std::size_t i) { return coeffs_[i]; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  auto begin() const { return coeffs_.begin(); }
  auto end() const { return coeffs_.end(); }

  bool is_zero() const;

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Rational& s);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& s, Element a) { return a *= s; }
  friend bool operator==(const Element&, const Element&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const Element& u);

/// eps = diag(1, eps_1, ..., eps_{2m-1}) with every entry +1 or -1.
/// The leading entry is fixed to +1; construction rejects anything else.
class SignVector {
 public:
  explicit SignVector(std::vector<int> eps);

  static SignVector identity(int dim);
  /// diag(1,-1,...,-1): the ordinary conjugation j0.
  static SignVector conjugation(int dim);

  int dim() const { return static_cast<int>(eps_.size()); }
  int operator[](std::size_t i) const { return eps_[i]; }
  const std::vector<int>& entries() const { return eps_; }

  bool is_identity() const;
  /// Sum of eps_1 .. eps_{2m-1}.
  int tail_sum() const;
  /// Indices k with eps_k = -1.
  std::vector<int> flipped() const;

  /// u -> eps (.) u, i.e. the hat map of u.
  Element apply(const Element& u) const;

  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> eps_;
};

/// w = u v, computed as H(u; c) v.
Element multiply(const Element& u, const Element& v, const Signature& sig);

/// u-bar = (u0, -u1, ..., -u_{2m-1}).
Element conjugate(const Element& u);

/// u^T eta u.
Rational norm_form(const Element& u, const Signature& sig);

/// u^T eta v.
Rational eta_product(const Element& u, const Element& v, const Signature& sig);

/// True when u -> eps (.) u reverses products of every pair of basis elements.
bool is_anti_automorphism(const Signature& sig, const SignVector& eps);

/// Every non-identity sign vector acting as an anti-involution, found by
/// exhaustive classification of the 2^(2m-1) candidates. The list is sorted
/// with the conjugation j0 first, then by the flipped-index set.
std::vector<SignVector> anti_involutions(const Signature& sig);

void require_dim(const Element& u, const Signature& sig, const char* what);

}  // namespace hurwitz
