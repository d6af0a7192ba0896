#include "hurwitz/hurwitz_matrix.hpp"

#include <array>
#include <string_view>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Left multiplication in A(c1,c2,c3). Entry (7,3) is -u4: with +u4 the
// norm identity H^T eta H = (u^T eta u) eta fails in dimension 8.
constexpr std::array<std::array<std::string_view, 8>, 8> kTemplate{{
    {"u0", "c1u1", "c2u2", "-c1c2u3", "c3u4", "-c1c3u5", "-c2c3u6", "c1c2c3u7"},
    {"u1", "u0", "c2u3", "-c2u2", "c3u5", "-c3u4", "c2c3u7", "-c2c3u6"},
    {"u2", "-c1u3", "u0", "c1u1", "c3u6", "-c1c3u7", "-c3u4", "c1c3u5"},
    {"u3", "-u2", "u1", "u0", "c3u7", "-c3u6", "c3u5", "-c3u4"},
    {"u4", "-c1u5", "-c2u6", "c1c2u7", "u0", "c1u1", "c2u2", "-c1c2u3"},
    {"u5", "-u4", "-c2u7", "c2u6", "u1", "u0", "-c2u3", "c2u2"},
    {"u6", "c1u7", "-u4", "-c1u5", "u2", "c1u3", "u0", "-c1u1"},
    {"u7", "u6", "-u5", "-u4", "u3", "u2", "-u1", "u0"},
}};

TemplateEntry parse_entry(std::string_view s) {
  TemplateEntry e{1, 0U, 0};
  if (!s.empty() && s.front() == '-') {
    e.sign = -1;
    s.remove_prefix(1);
  }
  while (s.size() >= 2 && s.front() == 'c') {
    e.c_mask |= 1U << static_cast<unsigned>(s[1] - '1');
    s.remove_prefix(2);
  }
  e.u_index = s.at(1) - '0';
  return e;
}

using Table = std::array<std::array<TemplateEntry, 8>, 8>;

const Table& table() {
  static const Table t = [] {
    Table out{};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) out[i][j] = parse_entry(kTemplate[i][j]);
    return out;
  }();
  return t;
}

int coefficient(const TemplateEntry& e, const Signature& sig) {
  int v = e.sign;
  for (int i = 0; i < 3; ++i)
    if (e.c_mask & (1U << i)) v *= sig.c(i + 1);
  return v;
}

}  // namespace

const TemplateEntry& template_entry(int row, int col) { return table().at(row).at(col); }

std::string symbolic_entry(int row, int col) { return std::string(kTemplate.at(row).at(col)); }

Matrix hurwitz_matrix(const Element& u, const Signature& sig) {
  require_dim(u, sig, "hurwitz");
  const int n = sig.dim();
  Matrix h(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const auto& e = table()[i][j];
      const Rational& uk = u[e.u_index];
      if (uk != 0) h(i, j) = coefficient(e, sig) * uk;
    }
  }
  return h;
}

std::vector<Matrix> hurwitz_basis(const Signature& sig) {
  std::vector<Matrix> basis;
  for (int a = 0; a < sig.dim(); ++a) basis.push_back(hurwitz_matrix(Element::basis(sig.dim(), a), sig));
  return basis;
}

GammaSet gamma_set(const Signature& sig) {
  auto basis = hurwitz_basis(sig);
  GammaSet set;
  for (std::size_t k = 1; k < basis.size(); ++k) set.gammas.push_back(basis[k].transpose());
  return set;
}

Rational verify_property1(const Element& u, const Signature& sig) {
  const Matrix h = hurwitz_matrix(u, sig);
  const Metric m = metric(sig);
  const Matrix eta = Matrix::diagonal(m.eta);
  const Rational r = norm_form(u, sig);
  if (h.transpose() * eta * h != r * eta) {
    throw IdentityViolation("H^T eta H != (u^T eta u) eta for u = " + to_string(u) + " in " + sig.label());
  }
  return r;
}

Matrix hurwitz_inverse(const Element& u, const Signature& sig) {
  const Rational r = norm_form(u, sig);
  if (r == 0) throw NullConeError("u = " + to_string(u) + " lies on the null cone of " + sig.label());
  const Matrix eta = Matrix::diagonal(metric(sig).eta);
  return Rational(1 / r) * (eta * hurwitz_matrix(u, sig).transpose() * eta);
}

Matrix power(const Element& u, const Signature& sig, int n) {
  const Matrix base = n >= 0 ? hurwitz_matrix(u, sig) : hurwitz_inverse(u, sig);
  Matrix result = Matrix::identity(static_cast<std::size_t>(sig.dim()));
  for (int k = 0; k < (n >= 0 ? n : -n); ++k) result = result * base;
  return result;
}

Element power_apply(const Element& u, const Signature& sig, int n, const Element& v) {
  require_dim(v, sig, "power_apply");
  if (n == 0) return v;
  if (n > 0) {
    const Matrix h = hurwitz_matrix(u, sig);
    Element w = v;
    for (int k = 0; k < n; ++k) w = h * w;
    return w;
  }
  const Rational r = norm_form(u, sig);
  if (r == 0) throw NullConeError("u = " + to_string(u) + " lies on the null cone of " + sig.label());
  const Rational inv = 1 / r;
  const Matrix ht = hurwitz_matrix(u, sig).transpose();
  const auto eta = metric(sig).eta;
  Element w = v;
  for (int k = 0; k < -n; ++k) {
    for (int i = 0; i < w.dim(); ++i) w[i] *= eta[i];
    w = ht * w;
    for (int i = 0; i < w.dim(); ++i) w[i] *= eta[i] * inv;
  }
  return w;
}

}  // namespace hurwitz
