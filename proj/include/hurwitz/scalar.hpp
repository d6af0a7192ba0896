#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

// Exact scalars. Every algebraic routine in the library works over these.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "p/q" or a finite decimal such as "-0.5" into an exact rational.
/// Throws InvalidArgument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Comma-separated lists, e.g. "-1,1,1".
std::vector<Rational> parse_rational_list(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

/// q^k for any integer k; k < 0 requires q != 0.
Rational pow(const Rational& q, int k);
Integer pow(const Integer& z, unsigned k);

bool is_integer(const Rational& q);

}  // namespace hurwitz
