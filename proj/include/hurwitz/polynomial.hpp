#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/scalar.hpp"

namespace hurwitz {

/// Sparse multivariate polynomial with exact rational coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Substitutes subs[i] for variable i. All substitutes share one variable set.
  Polynomial compose(std::span<const Polynomial> subs) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_;
  std::map<Exponents, Rational> terms_;
};

Polynomial pow(const Polynomial& p, unsigned k);

/// Parses expressions such as "x0^2 - c1*x1^2 + 3/2*x0*x1". Identifiers are
/// looked up first in var_names (becoming variables), then in constants.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names,
                            const std::map<std::string, Rational>& constants = {});

/// num / den, kept unreduced. Only used for pointwise exact evaluation.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(Polynomial num);
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  RationalFunction derivative(std::size_t var) const;
  /// Throws DomainError if the denominator vanishes at the point.
  Rational evaluate(std::span<const Rational> point) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const Rational& s, const RationalFunction& a);

 private:
  Polynomial num_;
  Polynomial den_;
};

/// f(subs_0, subs_1, ...) for a polynomial f.
RationalFunction compose(const Polynomial& f, std::span<const RationalFunction> subs);

}  // namespace hurwitz
