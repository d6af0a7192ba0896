#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hurwitz/algebra.hpp"

namespace hurwitz {

/// Seeded generator of small exact test data. Identical seeds give identical streams.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform_int(int lo, int hi);
  /// p/q with |p| <= 9 and 1 <= q <= 6.
  Rational rational();
  Element element(int dim);
  /// Resamples until u^T eta u != 0.
  Element off_cone(const Signature& sig);
  /// Leading entry 1, the rest uniformly +1 or -1.
  SignVector sign_vector(int dim);
  std::vector<Integer> integers(int dim, int bound);

 private:
  std::mt19937_64 rng_;
};

/// Every sign vector of the given dimension, ordered by the bit pattern of
/// eps_1 .. eps_{dim-1} (bit set means -1).
std::vector<SignVector> all_sign_vectors(int dim);

}  // namespace hurwitz
