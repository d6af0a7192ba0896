#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Exponents(nvars, 0U), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
  Polynomial p(nvars);
  Exponents e(nvars, 0U);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != nvars_) throw DimensionMismatch("polynomial term has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (unsigned k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e.at(var) == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw DimensionMismatch("polynomial evaluated at a point of the wrong size");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t *= pow(point[i], static_cast<int>(e[i]));
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs) const {
  if (subs.size() != nvars_) throw DimensionMismatch("compose: wrong number of substitutes");
  const std::size_t target = subs.empty() ? 0 : subs[0].nvars();
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i]) t = t * hurwitz::pow(subs[i], e[i]);
    out += t;
  }
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw DimensionMismatch("polynomial sum: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.nvars_ != nvars_) throw DimensionMismatch("polynomial difference: variable count mismatch");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial product: variable count mismatch");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), 1);
  Polynomial base = p;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (names.size() != nvars_) throw DimensionMismatch("polynomial printed with the wrong number of names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first, then lexicographically larger exponents first.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (unsigned k : a.first) da += k;
    for (unsigned k : b.first) db += k;
    return da > db;
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    bool has_var = false;
    for (unsigned k : e) has_var |= k != 0;
    if (!has_var || mag != 1) os << hurwitz::to_string(mag) << (has_var ? "*" : "");
    bool first_var = true;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!first_var) os << '*';
      first_var = false;
      os << names[i];
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> names, const std::map<std::string, Rational>& constants)
      : text_(text), names_(names), constants_(constants) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("cannot parse polynomial '" + std::string(text_) + "' at offset " +
                          std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return Rational(-1) * unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = hurwitz::pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Polynomial primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    const char ch = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' ||
                                     text_[pos_] == '.'))
        ++pos_;
      return Polynomial::constant(names_.size(), parse_rational(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string id(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == id) return Polynomial::variable(names_.size(), i);
      if (auto it = constants_.find(id); it != constants_.end())
        return Polynomial::constant(names_.size(), it->second);
      pos_ = start;
      fail("unknown identifier '" + id + "'");
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::span<const std::string> names_;
  const std::map<std::string, Rational>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> var_names,
                            const std::map<std::string, Rational>& constants) {
  return Parser(text, var_names, constants).parse();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  Polynomial dn = num_.derivative(var);
  Polynomial dd = den_.derivative(var);
  if (dd.is_zero()) return RationalFunction(dn, den_);
  return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) throw DomainError("rational function evaluated at a pole");
  return num_.evaluate(point) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + Rational(-1) * b;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const Rational& s, const RationalFunction& a) { return RationalFunction(s * a.num_, a.den_); }

RationalFunction compose(const Polynomial& f, std::span<const RationalFunction> subs) {
  if (subs.size() != f.nvars()) throw DimensionMismatch("compose: wrong number of substitutes");
  const std::size_t target = subs.empty() ? 0 : subs[0].numerator().nvars();
  RationalFunction out{Polynomial(target)};
  for (const auto& [e, c] : f.terms()) {
    RationalFunction t(Polynomial::constant(target, c));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) t = t * subs[i];
    out = out + t;
  }
  return out;
}

}  // namespace hurwitz
