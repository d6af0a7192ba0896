#include "hurwitz/calculus.hpp"

#include <algorithm>
#include <cmath>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_matrix.hpp"

namespace hurwitz {

namespace {

constexpr double kFdTolerance = 1e-6;

void require_quadratic(const TransformSpec& spec) {
  if (spec.n != 1) throw InvalidArgument("one-forms are defined for N = 1, got " + to_string(spec));
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// H(u) = [[u0, c1 u1], [u1, u0]] over the variables u0, u1.
PolyMatrix symbolic_h2(int c1) {
  const auto u0 = Polynomial::variable(2, 0);
  const auto u1 = Polynomial::variable(2, 1);
  return {{u0, Rational(c1) * u1}, {u1, u0}};
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.size(), std::vector<Polynomial>(b.front().size(), Polynomial(2)));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.front().size(); ++j) {
      for (std::size_t k = 0; k < b.size(); ++k) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

PolyMatrix identity2() {
  return {{Polynomial::constant(2, 1), Polynomial(2)}, {Polynomial(2), Polynomial::constant(2, 1)}};
}

PolyMatrix symbolic_power(int c1, int n) {
  PolyMatrix out = identity2();
  const PolyMatrix h = symbolic_h2(c1);
  for (int k = 0; k < n; ++k) out = multiply(out, h);
  return out;
}

PolyMatrix jacobian(const std::vector<Polynomial>& x) {
  PolyMatrix j(x.size(), std::vector<Polynomial>(2, Polynomial(2)));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t k = 0; k < 2; ++k) j[i][k] = x[i].derivative(k);
  }
  return j;
}

Matrix evaluate(const PolyMatrix& m, const Element& u) {
  Matrix out(m.size(), m.front().size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.front().size(); ++j) out(i, j) = m[i][j].evaluate(u.coeffs());
  }
  return out;
}

double max_abs(const Matrix& m) {
  double out = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out = std::max(out, std::abs(m(i, j).get_d()));
  }
  return out;
}

double relative_error(const Matrix& measured, const Matrix& expected) {
  const double scale = std::max(max_abs(expected), 1e-300);
  return max_abs(measured - expected) / scale;
}

IdentityCheck exact_check(std::string relation, std::string lhs, std::string rhs) {
  IdentityCheck c{std::move(relation), "exact", std::move(lhs), std::move(rhs), 0.0, false};
  c.passed = c.lhs == c.rhs;
  if (!c.passed) c.relative_error = 1.0;
  return c;
}

IdentityCheck fd_check(std::string relation, const Matrix& measured, const Matrix& expected) {
  IdentityCheck c{std::move(relation), "finite-difference", to_string(measured), to_string(expected),
                  relative_error(measured, expected), false};
  c.passed = c.relative_error <= kFdTolerance;
  if (!c.passed) {
    throw ToleranceExceeded(c.relation + ": finite-difference value " + c.lhs + " vs expected " + c.rhs,
                            c.relative_error, kFdTolerance);
  }
  return c;
}

// Central differences of the exact map at rational perturbations, so the only
// error is truncation.
Matrix fd_jacobian(const TransformSpec& spec, const Element& u) {
  Matrix j(2, 2);
  for (int k = 0; k < 2; ++k) {
    Rational mag = abs(u[k]);
    Rational h = Rational(1, 1000000) * (mag > 1 ? mag : Rational(1));
    Element plus = u, minus = u;
    plus[k] += h;
    minus[k] -= h;
    const Element diff = apply(spec, plus) - apply(spec, minus);
    for (int i = 0; i < 2; ++i) j(i, k) = diff[i] / (2 * h);
  }
  return j;
}

std::string vector_string(const std::vector<Rational>& v) { return to_string(Element(v)); }

}  // namespace

Matrix omega_matrix(const TransformSpec& spec, const Element& u) {
  require_quadratic(spec);
  require_dim(u, spec.sig, "omega");
  Matrix m = hurwitz_matrix(u, spec.sig);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= 2 * spec.eps[j];
  }
  return m;
}

Element omega(const TransformSpec& spec, const Element& u, const Element& du) {
  require_dim(du, spec.sig, "omega");
  return omega_matrix(spec, u) * du;
}

std::vector<int> constraint_rows(const TransformSpec& spec) {
  require_quadratic(spec);
  return quadratic_forms(spec).vanishing;
}

std::vector<Element> constraint_kernel(const TransformSpec& spec, const Element& u) {
  const auto rows = constraint_rows(spec);
  const Matrix om = omega_matrix(spec, u);
  if (rows.empty()) {
    std::vector<Element> all;
    for (int k = 0; k < spec.sig.dim(); ++k) all.push_back(Element::basis(spec.sig.dim(), k));
    return all;
  }
  Matrix c(rows.size(), om.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < om.cols(); ++j) c(i, j) = om(static_cast<std::size_t>(rows[i]), j);
  }
  return null_space(c);
}

std::pair<Rational, Rational> verify_one_form_norm(const TransformSpec& spec, const Element& u,
                                                   const Element& du) {
  const Element w = omega(spec, u, du);
  Rational lhs = norm_form(w, spec.sig);
  Rational rhs = 4 * norm_form(u, spec.sig) * norm_form(du, spec.sig);
  if (lhs != rhs) {
    throw IdentityViolation("Omega^T eta Omega = " + to_string(lhs) + " but 4 r du^T eta du = " + to_string(rhs));
  }
  return {lhs, rhs};
}

Rational line_element_reduction(const TransformSpec& spec, const Element& u, const Element& du) {
  const Element w = omega(spec, u, du);
  const auto rows = constraint_rows(spec);
  for (int i : rows) {
    if (w[i] != 0) {
      throw ConstraintViolation("omega_" + std::to_string(i) + "(du) = " + to_string(w[i]) + ", expected 0");
    }
  }
  const auto eta = metric(spec.sig).eta;
  Rational reduced = 0;
  for (int a = 0; a < w.dim(); ++a) {
    if (std::find(rows.begin(), rows.end(), a) == rows.end()) reduced += eta[a] * w[a] * w[a];
  }
  Rational full = 4 * norm_form(u, spec.sig) * norm_form(du, spec.sig);
  if (reduced != full) {
    throw IdentityViolation("reduced line element " + to_string(reduced) + " differs from 4 r du^T eta du = " +
                            to_string(full));
  }
  return full;
}

void verify_total_differentials(const TransformSpec& spec) {
  const auto forms = quadratic_forms(spec);
  const auto d = static_cast<std::size_t>(spec.sig.dim());
  // Row alpha of 2 H(u) eps is linear in u; its coefficient of u_k du_j is
  // 2 (B_k)_{alpha j} eps_j. The gradient of u^T M u is 2 M u.
  const auto basis = hurwitz_basis(spec.sig);
  for (std::size_t a = 0; a < d; ++a) {
    if (std::find(forms.vanishing.begin(), forms.vanishing.end(), static_cast<int>(a)) != forms.vanishing.end()) {
      continue;
    }
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        const Rational row_coef = 2 * basis[k](a, j) * spec.eps[j];
        const Rational grad_coef = 2 * forms.forms[a](j, k);
        if (row_coef != grad_coef) {
          throw IdentityViolation("omega_" + std::to_string(a) + " is not d(x_" + std::to_string(a) + ") for " +
                                  to_string(spec));
        }
      }
    }
  }
}

bool PowerMapReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

bool power_map_jacobian_identity(int c1, int n) {
  if (n < 0) throw InvalidArgument("the Jacobian identity is polynomial only for N >= 0");
  const TransformSpec spec(n, Signature(2, {c1}), SignVector::identity(2));
  const PolyMatrix j = jacobian(transform_polynomials(spec));
  const PolyMatrix hn = symbolic_power(c1, n);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      if (j[i][k] != Rational(n + 1) * hn[i][k]) return false;
    }
  }
  return true;
}

std::vector<Polynomial> standard_test_functions(int c1) {
  const auto x0 = Polynomial::variable(2, 0);
  const auto x1 = Polynomial::variable(2, 1);
  return {Polynomial::constant(2, 1), x0, x1, x0 * x0, x0 * x1, x0 * x0 - Rational(c1) * (x1 * x1)};
}

PowerMapReport verify_power_map(int c1, int n, const Element& u, const Polynomial& test_fn) {
  if (n == -1) throw InvalidArgument("N = -1 is excluded");
  if (c1 != 1 && c1 != -1) throw InvalidArgument("c1 must be +1 or -1");
  if (u.dim() != 2) throw DimensionMismatch("the power map identities are stated in dimension 2");
  if (test_fn.nvars() != 2) throw DimensionMismatch("the test function must be a polynomial in x0, x1");

  const Signature sig(2, {c1});
  const TransformSpec spec(n, sig, SignVector::identity(2));
  const Rational r = norm_form(u, sig);
  if (n < 0 && r == 0) throw NullConeError("u = " + to_string(u) + " lies on the null cone");

  PowerMapReport report{c1, n, u, apply(spec, u), {}};
  const Element& x = report.x;
  const auto eta = metric(sig).eta;
  const Matrix eta_m = Matrix::diagonal(eta);
  const Rational n1 = n + 1;

  // (i) norm power
  report.checks.push_back(exact_check("norm power", to_string(norm_form(x, sig)), to_string(pow(r, n + 1))));

  // (ii) Jacobian and (iii) line element
  const Matrix hn = power(u, sig, n);
  const Matrix j_expected = n1 * hn;
  const Matrix line_expected = (n1 * n1 * pow(r, n)) * eta_m;
  if (n >= 0) {
    const PolyMatrix j_sym = jacobian(transform_polynomials(spec));
    const Matrix j_at_u = evaluate(j_sym, u);
    IdentityCheck jac = exact_check("jacobian", to_string(j_at_u), to_string(j_expected));
    jac.passed = jac.passed && power_map_jacobian_identity(c1, n);
    report.checks.push_back(jac);
    report.checks.push_back(
        exact_check("line element", to_string(j_at_u.transpose() * eta_m * j_at_u), to_string(line_expected)));
  } else {
    const Matrix j_fd = fd_jacobian(spec, u);
    report.checks.push_back(fd_check("jacobian", j_fd, j_expected));
    report.checks.push_back(fd_check("line element", j_fd.transpose() * eta_m * j_fd, line_expected));
  }

  // Pullback F(u) = f(x(u)) as an exact rational function.
  const auto numerators = transform_polynomials(spec);
  const Polynomial den = n < 0 ? pow(Polynomial::variable(2, 0) * Polynomial::variable(2, 0) -
                                         Rational(c1) * (Polynomial::variable(2, 1) * Polynomial::variable(2, 1)),
                                     static_cast<unsigned>(-n))
                               : Polynomial::constant(2, 1);
  std::vector<RationalFunction> xs;
  for (const auto& p : numerators) xs.emplace_back(p, den);
  const RationalFunction F = compose(test_fn, xs);

  // (iv) gradient: grad_x f = (N+1)^{-1} r^{-N} eta H^N eta grad_u F
  std::vector<Rational> grad_x, grad_u_vec;
  for (std::size_t i = 0; i < 2; ++i) {
    grad_x.push_back(test_fn.derivative(i).evaluate(x.coeffs()));
    grad_u_vec.push_back(F.derivative(i).evaluate(u.coeffs()));
  }
  const Element mapped = (pow(r, -n) / n1) * (eta_m * hn * eta_m * Element(grad_u_vec));
  report.checks.push_back(exact_check("gradient", vector_string(grad_x), to_string(mapped)));

  // (v) (d_u0u0 - c1 d_u1u1) F = (N+1)^2 r^N [(d_x0x0 - c1 d_x1x1) f](x(u))
  const Rational box_u = F.derivative(0).derivative(0).evaluate(u.coeffs()) -
                         c1 * F.derivative(1).derivative(1).evaluate(u.coeffs());
  const Rational box_x = test_fn.derivative(0).derivative(0).evaluate(x.coeffs()) -
                         c1 * test_fn.derivative(1).derivative(1).evaluate(x.coeffs());
  report.checks.push_back(exact_check("wave operator", to_string(box_u), to_string(n1 * n1 * pow(r, n) * box_x)));

  return report;
}

}  // namespace hurwitz
