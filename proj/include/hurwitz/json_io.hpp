#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hurwitz/algebra.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/number_theory.hpp"

namespace hurwitz {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings.
Json rational_json(const Rational& q);
Json element_json(const Element& u);
Json matrix_json(const Matrix& m);

/// Bare JSON numbers of any size, e.g. "[3, -4, 123456789012345678901234567890]".
std::string integer_array_json(std::span<const Integer> values);

/// One generated solution as a single-line object:
/// {"family", "c", ["n",] "seed", "values", "primitive"}.
std::string solution_json(const DiophantineFamily& family, const SolutionTuple& sol);

/// Parses JSON keeping integers too large for 64 bits as digit strings.
Json parse_json_lossless(std::string_view text);

/// Accepts JSON integers, and digit strings from parse_json_lossless.
Integer json_integer(const Json& j);
std::vector<Integer> json_integer_array(const Json& j);

}  // namespace hurwitz
