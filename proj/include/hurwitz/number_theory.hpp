#pragma once

#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "hurwitz/algebra.hpp"
#include "hurwitz/scalar.hpp"

namespace hurwitz {

/// Families of integer solutions produced by quadratic (and one power)
/// transforms. The external identifiers are listed next to each value.
enum class Family {
  TypeA8,       // "EQ38": A^2 - c1 B^2 - ... - c1c2c3 H^2 = I^2
  TypeA4,       // "EQ38_DIM4"
  TypeA2,       // "EQ38_DIM2" (alias "EQ43"): A^2 - c1 B^2 = I^2
  TypeB8,       // "EQ39": A^2 - c2 B^2 + c1c2 C^2 - c3 D^2 + c1c3 E^2 = F^2
  TypeB4,       // "EQ39_DIM4": A^2 - c2 B^2 + c1c2 C^2 = F^2
  TypeC8,       // "EQ40": A^2 - c2 B^2 + ... - c1c2c3 G^2 = H^2
  Pythagorean,  // "EQ41": A^2 + B^2 + C^2 = F^2
  TwiceSquare,  // "EQ46": A^2 + 2 B^2 = F^2, seeds with u1 = 0 and u2 = u3
  PowerNorm,    // "EQ47": A^2 - c1 B^2 = C^(N+1)
};

std::string family_id(Family f);
/// Accepts the identifiers above; throws InvalidArgument otherwise.
Family parse_family(std::string_view id);
std::vector<Family> all_families();

class DiophantineFamily {
 public:
  /// c must have the length the family needs (3, 2, 1 or 0 entries); N is
  /// used by PowerNorm only and must be >= 2 there.
  DiophantineFamily(Family id, std::vector<int> c = {}, int n = 2);

  Family id() const { return id_; }
  const std::vector<int>& c() const { return c_; }
  int n() const { return n_; }
  int arity() const;
  int seed_dim() const;
  /// Number of sign parameters the family takes.
  static int parameter_count(Family f);

 private:
  Family id_;
  std::vector<int> c_;
  int n_;
};

struct SolutionTuple {
  std::vector<Integer> values;
  std::vector<Integer> seed;
  bool primitive = false;
};

/// Throws DimensionMismatch for a seed of the wrong length and
/// ConstraintViolation for a TwiceSquare seed off its constraint set.
SolutionTuple solution_from_seed(const DiophantineFamily& family, std::span<const Integer> seed);

/// Exact comparison of both sides. Throws ArityMismatch.
bool verify(const DiophantineFamily& family, std::span<const Integer> values);

/// Absolute values, except that PowerNorm keeps the sign of C when N+1 is odd.
std::vector<Integer> canonical_key(const DiophantineFamily& family, std::span<const Integer> values);

Integer gcd(std::span<const Integer> values);

/// sum_i coeffs[i] u_i = 0.
struct LinearConstraint {
  std::vector<Integer> coeffs;
};

/// Seeds in [-bound, bound]^dim satisfying every constraint, in lexicographic order.
std::vector<std::vector<Integer>> constrained_seeds(int dim, int bound, std::span<const LinearConstraint> constraints);

/// The constraints a family imposes on its seeds (u1 = 0, u2 = u3 for TwiceSquare).
std::vector<LinearConstraint> seed_constraints(Family f);

struct GenerateOptions {
  bool primitive_only = false;
  bool dedupe = false;
};

/// Enumerates seeds in lexicographic order and returns the solutions sorted by
/// canonical key. With primitive_only, degree-2 tuples are divided by their
/// gcd and PowerNorm tuples with gcd > 1 are dropped; zero tuples are dropped.
/// With dedupe, values are replaced by their canonical key and the first seed
/// per key is kept.
std::vector<SolutionTuple> generate(const DiophantineFamily& family, int bound, GenerateOptions options = {});

/// w = H(u) v; returns (w^T eta w, u^T eta u, v^T eta v). Throws IdentityViolation.
std::tuple<Rational, Rational, Rational> composition_identity(const Element& u, const Element& v,
                                                              const Signature& sig);

}  // namespace hurwitz
