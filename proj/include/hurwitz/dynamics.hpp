#pragma once

#include <optional>
#include <vector>

#include "hurwitz/scalar.hpp"

namespace hurwitz {

/// Potential -Z / r^alpha pulled back through x = H(u)^N u in dimension 2,
/// where 2N = alpha (N + 1) turns the problem into one with potential
/// -(N+1)^2 E rho^(2N) and eigenvalue (N+1)^2 Z.
struct AdmissiblePair {
  int alpha;
  int n;
  bool trivial;

  friend bool operator==(const AdmissiblePair&, const AdmissiblePair&) = default;
};

/// Integer alpha in [alpha_min, alpha_max] with an integer N != -1 solving
/// 2N = alpha (N + 1). (0, 0) is included and flagged trivial.
std::vector<AdmissiblePair> admissible_pairs(int alpha_min, int alpha_max);

/// N = alpha / (2 - alpha) when it is an integer other than -1.
std::optional<int> exponent_for(const Rational& alpha);

struct DualityResult {
  Rational alpha;
  int n;
  int new_potential_exponent;
  Rational new_potential_coefficient;
  Rational new_eigenvalue;
  bool roles_swapped;
};

/// Throws InadmissiblePair unless 2N - alpha (N + 1) = 0 and N != -1.
DualityResult dualize(const Rational& alpha, int n, const Rational& z, const Rational& e);

}  // namespace hurwitz
