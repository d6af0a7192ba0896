#include "hurwitz/transform.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_matrix.hpp"

namespace hurwitz {

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

int c_product(unsigned mask, const Signature& sig) {
  int v = 1;
  for (int i = 0; i < 3; ++i) {
    if (mask & (1u << i)) v *= sig.c(i + 1);
  }
  return v;
}

PolyMatrix symbolic_hurwitz(const Signature& sig) {
  const auto d = static_cast<std::size_t>(sig.dim());
  PolyMatrix h(d, std::vector<Polynomial>(d, Polynomial(d)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& e = template_entry(static_cast<int>(i), static_cast<int>(j));
      const int coef = e.sign * c_product(e.c_mask, sig);
      h[i][j] = Rational(coef) * Polynomial::variable(d, static_cast<std::size_t>(e.u_index));
    }
  }
  return h;
}

std::vector<Polynomial> mat_vec(const PolyMatrix& m, const std::vector<Polynomial>& v) {
  std::vector<Polynomial> out(m.size(), Polynomial(v.front().nvars()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  }
  return out;
}

bool same_up_to_sign(const Matrix& a, const Matrix& b) { return a == b || a == Rational(-1) * b; }

}  // namespace

TransformSpec::TransformSpec(int n_, Signature sig_, SignVector eps_)
    : n(n_), sig(std::move(sig_)), eps(std::move(eps_)) {
  if (eps.dim() != sig.dim()) {
    throw DimensionMismatch("sign vector has length " + std::to_string(eps.dim()) +
                            ", algebra dimension is " + std::to_string(sig.dim()));
  }
}

std::string to_string(const TransformSpec& spec) {
  std::ostringstream os;
  os << "T[" << spec.n << "; " << spec.sig.label() << "; " << spec.eps.to_string() << "]";
  return os.str();
}

std::string TransformType::label(int n) const {
  std::string s;
  switch (kind) {
    case TransformKind::A: s = "A"; break;
    case TransformKind::B: s = "B"; break;
    case TransformKind::C: s = "C"; break;
  }
  s += std::to_string(n);
  if (j_index) s += " (j" + std::to_string(*j_index) + ")";
  return s;
}

TransformType classify(const Signature& sig, const SignVector& eps) {
  if (eps.dim() != sig.dim()) throw DimensionMismatch("sign vector length does not match the algebra");
  if (eps.is_identity()) return {TransformKind::A, std::nullopt};
  if (is_anti_automorphism(sig, eps)) {
    const auto all = anti_involutions(sig);
    const auto it = std::find(all.begin(), all.end(), eps);
    return {TransformKind::B, static_cast<int>(it - all.begin())};
  }
  return {TransformKind::C, std::nullopt};
}

Element apply(const TransformSpec& spec, const Element& u) {
  require_dim(u, spec.sig, "apply");
  return power_apply(u, spec.sig, spec.n, spec.eps.apply(u));
}

Element QuadraticFormMap::evaluate(const Element& u) const {
  std::vector<Rational> x;
  x.reserve(forms.size());
  for (const auto& m : forms) x.push_back(quadratic_value(m, u));
  return Element(std::move(x));
}

QuadraticFormMap quadratic_forms(const TransformSpec& spec) {
  if (spec.n != 1) throw InvalidArgument("quadratic forms exist only for N = 1");
  const auto d = static_cast<std::size_t>(spec.sig.dim());
  const auto basis = hurwitz_basis(spec.sig);
  QuadraticFormMap out;
  for (std::size_t a = 0; a < d; ++a) {
    // x_a = sum_{k,j} (B_k)_{aj} eps_j u_k u_j, symmetrised.
    Matrix raw(d, d);
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) raw(k, j) = basis[k](a, j) * spec.eps[j];
    }
    Matrix sym = Rational(1, 2) * (raw + raw.transpose());
    if (sym.is_zero()) out.vanishing.push_back(static_cast<int>(a));
    out.forms.push_back(std::move(sym));
  }
  return out;
}

std::vector<Polynomial> transform_polynomials(const TransformSpec& spec) {
  const auto d = static_cast<std::size_t>(spec.sig.dim());
  PolyMatrix h = symbolic_hurwitz(spec.sig);
  if (spec.n < 0) {
    // Numerator of H^{-1} is eta H^T eta.
    const auto eta = metric(spec.sig).eta;
    PolyMatrix adj(d, std::vector<Polynomial>(d, Polynomial(d)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) adj[i][j] = Rational(eta[i] * eta[j]) * h[j][i];
    }
    h = std::move(adj);
  }
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < d; ++i) {
    v.push_back(Rational(spec.eps[i]) * Polynomial::variable(d, i));
  }
  for (int k = 0; k < std::abs(spec.n); ++k) v = mat_vec(h, v);
  return v;
}

std::vector<int> vanishing_components(const TransformSpec& spec) {
  const auto polys = transform_polynomials(spec);
  std::vector<int> out;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) out.push_back(static_cast<int>(i));
  }
  return out;
}

Element compress(const Element& x, std::span<const int> vanishing) {
  std::vector<Rational> out;
  for (int i = 0; i < x.dim(); ++i) {
    if (std::find(vanishing.begin(), vanishing.end(), i) == vanishing.end()) out.push_back(x[i]);
  }
  return Element(std::move(out));
}

std::pair<Rational, Rational> verify_norm_power(const TransformSpec& spec, const Element& u) {
  const Element x = apply(spec, u);
  Rational lhs = norm_form(x, spec.sig);
  Rational rhs = pow(norm_form(u, spec.sig), spec.n + 1);
  if (lhs != rhs) {
    throw IdentityViolation("x^T eta x = " + to_string(lhs) + " but (u^T eta u)^(N+1) = " + to_string(rhs) +
                            " for " + to_string(spec) + " at u = " + to_string(u));
  }
  return {lhs, rhs};
}

Element closed_form(ClosedForm form, const Signature& sig, const Element& u) {
  require_dim(u, sig, "closed_form");
  const int dim = sig.dim();
  if (form == ClosedForm::Fock && dim != 4) throw DimensionMismatch("the Fock projection is defined in dimension 4");

  std::vector<Rational> p(8);
  for (int i = 0; i < dim; ++i) p[i] = u[i];
  const Rational c1 = sig.c(1), c2 = sig.c(2), c3 = sig.c(3);
  const Rational &u0 = p[0], &u1 = p[1], &u2 = p[2], &u3 = p[3], &u4 = p[4], &u5 = p[5], &u6 = p[6], &u7 = p[7];
  const Rational r = norm_form(u, sig);

  std::vector<Rational> x(8);
  switch (form) {
    case ClosedForm::TypeA:
      x[0] = u0 * u0 + c1 * u1 * u1 + c2 * u2 * u2 - c1 * c2 * u3 * u3 + c3 * u4 * u4 - c1 * c3 * u5 * u5 -
             c2 * c3 * u6 * u6 + c1 * c2 * c3 * u7 * u7;
      for (int k = 1; k < 8; ++k) x[k] = 2 * u0 * p[k];
      break;
    case ClosedForm::TypeBSubalgebra:
      x[0] = u0 * u0 - c1 * u1 * u1 + c2 * u2 * u2 - c1 * c2 * u3 * u3 + c3 * u4 * u4 - c1 * c3 * u5 * u5 +
             c2 * c3 * u6 * u6 - c1 * c2 * c3 * u7 * u7;
      x[2] = 2 * (u0 * u2 + c1 * u1 * u3 + c3 * u4 * u6 - c1 * c3 * u5 * u7);
      x[3] = 2 * (u0 * u3 + u1 * u2 - c3 * u5 * u6 + c3 * u4 * u7);
      x[4] = 2 * (u0 * u4 + c1 * u1 * u5 - c2 * u2 * u6 + c1 * c2 * u3 * u7);
      x[5] = 2 * (u0 * u5 + u1 * u4 + c2 * u3 * u6 - c2 * u2 * u7);
      break;
    case ClosedForm::TypeBConjugation:
      x[0] = r;
      break;
    case ClosedForm::TypeC:
      x[0] = u0 * u0 - c1 * u1 * u1 - c2 * u2 * u2 + c1 * c2 * u3 * u3 - c3 * u4 * u4 + c1 * c3 * u5 * u5 -
             c2 * c3 * u6 * u6 + c1 * c2 * c3 * u7 * u7;
      x[2] = 2 * (-c3 * u4 * u6 + c1 * c3 * u5 * u7);
      x[3] = 2 * (-c3 * u4 * u7 + c3 * u5 * u6);
      // The u3u7 coefficient is c1c2, confirmed against apply().
      x[4] = 2 * (c2 * u2 * u6 - c1 * c2 * u3 * u7);
      x[5] = 2 * (c2 * u2 * u7 - c2 * u3 * u6);
      x[6] = 2 * (u0 * u6 - c1 * u1 * u7);
      x[7] = 2 * (u0 * u7 - u1 * u6);
      break;
    case ClosedForm::Fock: {
      if (r == 0) throw NullConeError("rho^2 = 0 at u = " + to_string(u));
      x[0] = (u0 * u0 + c1 * u1 * u1 - c2 * u2 * u2 + c1 * c2 * u3 * u3) / r;
      x[1] = -2 * u0 * u1 / r;
      x[2] = -2 * c1 * u3 * u1 / r;
      x[3] = -2 * u2 * u1 / r;
      break;
    }
  }
  x.resize(static_cast<std::size_t>(dim));
  return Element(std::move(x));
}

TransformSpec closed_form_spec(ClosedForm form, const Signature& sig) {
  const int dim = sig.dim();
  auto truncated = [dim](std::vector<int> e) {
    e.resize(static_cast<std::size_t>(dim));
    return SignVector(std::move(e));
  };
  switch (form) {
    case ClosedForm::TypeA: return {1, sig, SignVector::identity(dim)};
    case ClosedForm::TypeBSubalgebra: return {1, sig, truncated({1, -1, 1, 1, 1, 1, -1, -1})};
    case ClosedForm::TypeBConjugation: return {1, sig, SignVector::conjugation(dim)};
    case ClosedForm::TypeC: return {1, sig, truncated({1, -1, -1, -1, -1, -1, 1, 1})};
    case ClosedForm::Fock:
      if (dim != 4) throw DimensionMismatch("the Fock projection is defined in dimension 4");
      return {-1, sig, SignVector({1, -1, 1, 1})};
  }
  throw InvalidArgument("unknown closed form");
}

TransformSpec named(NamedTransform name, bool lambert_kibler_both_positive) {
  const SignVector ks_eps({1, -1, 1, 1});
  switch (name) {
    case NamedTransform::LeviCivita: return {1, Signature(2, {-1}), SignVector::identity(2)};
    case NamedTransform::KustaanheimoStiefel: return {1, Signature(4, {-1, -1}), ks_eps};
    case NamedTransform::Iwai: return {1, Signature(4, {-1, 1}), ks_eps};
    case NamedTransform::LambertKibler:
      return {1, Signature(4, lambert_kibler_both_positive ? std::vector<int>{1, 1} : std::vector<int>{1, -1}),
              ks_eps};
    case NamedTransform::Fock: return {-1, Signature(4, {-1, -1}), ks_eps};
  }
  throw InvalidArgument("unknown named transform");
}

bool equivalent(const QuadraticFormMap& a, const QuadraticFormMap& b) {
  if (a.forms.size() != b.forms.size()) return false;
  const std::size_t n = a.forms.size();
  std::vector<bool> used(n, false);
  // Backtracking: forms repeat up to sign, so a greedy choice can dead-end.
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || !same_up_to_sign(a.forms[i], b.forms[j])) continue;
      used[j] = true;
      if (match(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return match(0);
}

std::string form_to_string(const Matrix& m) {
  const std::size_t d = m.rows();
  Polynomial p(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (m(i, j) != 0) p += m(i, j) * (Polynomial::variable(d, i) * Polynomial::variable(d, j));
    }
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < d; ++i) names.push_back("u" + std::to_string(i));
  return p.to_string(names);
}

}  // namespace hurwitz
