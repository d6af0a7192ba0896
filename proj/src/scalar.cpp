#include "hurwitz/scalar.hpp"

#include <cctype>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return all_digits(s);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    parts.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer parse_integer(std::string_view text) {
  text = trim(text);
  if (!is_integer_literal(text)) {
    throw InvalidArgument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const std::string original(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(num) || !all_digits(den)) {
      throw InvalidArgument("not a rational: '" + original + "'");
    }
    Integer d{std::string(den)};
    if (d == 0) throw InvalidArgument("zero denominator: '" + original + "'");
    Rational q(parse_integer(num), d);
    q.canonicalize();
    return q;
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view sign_and_int = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!sign_and_int.empty() && (sign_and_int.front() == '-' || sign_and_int.front() == '+')) {
      negative = sign_and_int.front() == '-';
      sign_and_int.remove_prefix(1);
    }
    if ((sign_and_int.empty() && frac.empty()) || (!sign_and_int.empty() && !all_digits(sign_and_int)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InvalidArgument("not a decimal: '" + original + "'");
    }
    Integer whole = sign_and_int.empty() ? Integer(0) : Integer(std::string(sign_and_int));
    Integer scale = pow(Integer(10), static_cast<unsigned>(frac.size()));
    Integer part = frac.empty() ? Integer(0) : Integer(std::string(frac));
    Rational q(whole * scale + part, scale);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  }
  return Rational(parse_integer(text));
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split_commas(text)) out.push_back(parse_rational(part));
  return out;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto part : split_commas(text)) {
    Integer z = parse_integer(part);
    if (!z.fits_sint_p()) throw InvalidArgument("integer out of range: '" + std::string(part) + "'");
    out.push_back(static_cast<int>(z.get_si()));
  }
  return out;
}

Rational pow(const Rational& q, int k) {
  if (k < 0) {
    if (q == 0) throw DomainError("negative power of zero");
    Rational inv = 1 / q;
    return pow(inv, -k);
  }
  Rational result = 1;
  Rational base = q;
  unsigned e = static_cast<unsigned>(k);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Integer pow(const Integer& z, unsigned k) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), k);
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace hurwitz
