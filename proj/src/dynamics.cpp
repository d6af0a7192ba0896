#include "hurwitz/dynamics.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

std::optional<int> exponent_for(const Rational& alpha) {
  if (alpha == 2) return std::nullopt;
  const Rational n = alpha / (2 - alpha);
  if (!is_integer(n) || n == -1) return std::nullopt;
  return static_cast<int>(n.get_num().get_si());
}

std::vector<AdmissiblePair> admissible_pairs(int alpha_min, int alpha_max) {
  if (alpha_min > alpha_max) throw InvalidArgument("empty alpha range");
  std::vector<AdmissiblePair> out;
  for (int a = alpha_min; a <= alpha_max; ++a) {
    if (auto n = exponent_for(a)) out.push_back({a, *n, a == 0 && *n == 0});
  }
  return out;
}

DualityResult dualize(const Rational& alpha, int n, const Rational& z, const Rational& e) {
  if (n == -1) throw InadmissiblePair("N = -1 is excluded");
  if (2 * n - alpha * (n + 1) != 0) {
    throw InadmissiblePair("2N - alpha (N + 1) = " + to_string(Rational(2 * n - alpha * (n + 1))) +
                           " for alpha = " + to_string(alpha) + ", N = " + std::to_string(n));
  }
  const Rational k = Rational((n + 1) * (n + 1));
  return {alpha, n, 2 * n, -k * e, k * z, n != 0};
}

}  // namespace hurwitz
