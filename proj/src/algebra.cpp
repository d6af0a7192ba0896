#include "hurwitz/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_matrix.hpp"

namespace hurwitz {

Signature::Signature(int dim, std::vector<int> c) : dim_(dim), c_(std::move(c)) {
  std::size_t expected = 0;
  switch (dim) {
    case 2: expected = 1; break;
    case 4: expected = 2; break;
    case 8: expected = 3; break;
    default: throw InvalidArgument("dimension must be 2, 4 or 8, got " + std::to_string(dim));
  }
  if (c_.size() != expected) {
    throw InvalidArgument("dimension " + std::to_string(dim) + " needs " + std::to_string(expected) +
                          " sign parameters, got " + std::to_string(c_.size()));
  }
  for (int ci : c_) {
    if (ci != 1 && ci != -1) throw InvalidArgument("sign parameters must be +1 or -1");
  }
}

int Signature::c(int i) const {
  if (i < 1 || i > 3) throw InvalidArgument("sign parameter index out of range");
  return static_cast<std::size_t>(i) <= c_.size() ? c_[static_cast<std::size_t>(i - 1)] : 0;
}

std::string Signature::label() const {
  std::ostringstream os;
  os << "A(";
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::vector<Signature> all_signatures() {
  std::vector<Signature> out;
  for (int dim : {2, 4, 8}) {
    const int k = dim == 2 ? 1 : dim == 4 ? 2 : 3;
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> c(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = (mask >> (k - 1 - i)) & 1 ? 1 : -1;
      out.emplace_back(dim, std::move(c));
    }
  }
  return out;
}

Metric metric(const Signature& sig) {
  // c_i = 0 beyond the signature's length never reaches the kept entries.
  const int c1 = sig.c(1), c2 = sig.c(2), c3 = sig.c(3);
  const int full[7] = {-c1, -c2, c1 * c2, -c3, c1 * c3, c2 * c3, -c1 * c2 * c3};
  Metric m;
  m.g.assign(full, full + sig.dim() - 1);
  m.eta.push_back(1);
  m.eta.insert(m.eta.end(), m.g.begin(), m.g.end());
  for (int e : m.eta) m.signature_sum += e;
  return m;
}

Element Element::zero(int dim) { return Element(std::vector<Rational>(static_cast<std::size_t>(dim))); }

Element Element::unit(int dim) { return basis(dim, 0); }

Element Element::basis(int dim, int k) {
  Element e = zero(dim);
  e[static_cast<std::size_t>(k)] = 1;
  return e;
}

bool Element::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& x) { return x == 0; });
}

Element& Element::operator+=(const Element& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("element sum: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Element& Element::operator-=(const Element& rhs) {
  if (size() != rhs.size()) throw DimensionMismatch("element difference: size mismatch");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Element& Element::operator*=(const Rational& s) {
  for (auto& x : coeffs_) x *= s;
  return *this;
}

std::string to_string(const Element& u) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < u.size(); ++i) os << (i ? ", " : "") << to_string(u[i]);
  os << ')';
  return os.str();
}

SignVector::SignVector(std::vector<int> eps) : eps_(std::move(eps)) {
  if (eps_.size() != 2 && eps_.size() != 4 && eps_.size() != 8) {
    throw InvalidArgument("sign vector length must be 2, 4 or 8");
  }
  if (eps_.front() != 1) throw InvalidArgument("sign vector must start with +1");
  for (int e : eps_) {
    if (e != 1 && e != -1) throw InvalidArgument("sign vector entries must be +1 or -1");
  }
}

SignVector SignVector::identity(int dim) { return SignVector(std::vector<int>(static_cast<std::size_t>(dim), 1)); }

SignVector SignVector::conjugation(int dim) {
  std::vector<int> e(static_cast<std::size_t>(dim), -1);
  e[0] = 1;
  return SignVector(std::move(e));
}

bool SignVector::is_identity() const {
  return std::all_of(eps_.begin(), eps_.end(), [](int e) { return e == 1; });
}

int SignVector::tail_sum() const {
  int s = 0;
  for (std::size_t k = 1; k < eps_.size(); ++k) s += eps_[k];
  return s;
}

std::vector<int> SignVector::flipped() const {
  std::vector<int> out;
  for (std::size_t k = 0; k < eps_.size(); ++k)
    if (eps_[k] == -1) out.push_back(static_cast<int>(k));
  return out;
}

Element SignVector::apply(const Element& u) const {
  if (u.size() != eps_.size()) throw DimensionMismatch("sign vector and element differ in dimension");
  Element out = u;
  for (std::size_t k = 0; k < eps_.size(); ++k)
    if (eps_[k] == -1) out[k] = -out[k];
  return out;
}

std::string SignVector::to_string() const {
  std::ostringstream os;
  os << "diag(";
  for (std::size_t i = 0; i < eps_.size(); ++i) os << (i ? "," : "") << eps_[i];
  os << ')';
  return os.str();
}

void require_dim(const Element& u, const Signature& sig, const char* what) {
  if (u.dim() != sig.dim()) {
    throw DimensionMismatch(std::string(what) + ": element has " + std::to_string(u.dim()) +
                            " components but " + sig.label() + " has dimension " + std::to_string(sig.dim()));
  }
}

Element multiply(const Element& u, const Element& v, const Signature& sig) {
  require_dim(u, sig, "multiply");
  require_dim(v, sig, "multiply");
  return hurwitz_matrix(u, sig) * v;
}

Element conjugate(const Element& u) {
  Element out = u;
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = -out[k];
  return out;
}

Rational eta_product(const Element& u, const Element& v, const Signature& sig) {
  require_dim(u, sig, "eta_product");
  require_dim(v, sig, "eta_product");
  const auto eta = metric(sig).eta;
  Rational acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0 || v[i] == 0) continue;
    if (eta[i] > 0)
      acc += u[i] * v[i];
    else
      acc -= u[i] * v[i];
  }
  return acc;
}

Rational norm_form(const Element& u, const Signature& sig) { return eta_product(u, u, sig); }

bool is_anti_automorphism(const Signature& sig, const SignVector& eps) {
  if (eps.dim() != sig.dim()) throw DimensionMismatch("sign vector and signature differ in dimension");
  const int n = sig.dim();
  // Basis products e_i e_j are columns of H(e_i).
  const auto basis = hurwitz_basis(sig);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // hat(e_i e_j) must equal hat(e_j) hat(e_i) = eps_i eps_j e_j e_i.
      const int s = eps[static_cast<std::size_t>(i)] * eps[static_cast<std::size_t>(j)];
      for (int k = 0; k < n; ++k) {
        const Rational lhs = eps[static_cast<std::size_t>(k)] * basis[static_cast<std::size_t>(i)](k, j);
        const Rational rhs = s * basis[static_cast<std::size_t>(j)](k, i);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

std::vector<SignVector> anti_involutions(const Signature& sig) {
  const int n = sig.dim();
  std::vector<SignVector> found;
  for (unsigned mask = 1; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> e(static_cast<std::size_t>(n), 1);
    for (int k = 1; k < n; ++k)
      if (mask & (1U << (k - 1))) e[static_cast<std::size_t>(k)] = -1;
    SignVector eps(std::move(e));
    if (is_anti_automorphism(sig, eps)) found.push_back(std::move(eps));
  }
  const SignVector j0 = SignVector::conjugation(n);
  std::sort(found.begin(), found.end(), [&](const SignVector& a, const SignVector& b) {
    if ((a == j0) != (b == j0)) return a == j0;
    return a.flipped() < b.flipped();
  });
  return found;
}

}  // namespace hurwitz
