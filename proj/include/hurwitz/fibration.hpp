#pragma once

#include <string>
#include <vector>

#include "hurwitz/transform.hpp"

namespace hurwitz {

enum class Compactness { Compact, NoncompactCompactFiber, NoncompactNoncompactFiber };

std::string to_string(Compactness c);

/// L, L0, L1 are empty for classes that carry no Lie-algebra data.
struct FibrationInfo {
  std::string name;
  std::string fiber;
  std::string base;
  Compactness compactness;
  std::string L;
  std::string L0;
  std::string L1;

  friend bool operator==(const FibrationInfo&, const FibrationInfo&) = default;
};

struct FibrationRow {
  int dim;
  FibrationInfo info;
};

/// Fibrations and Lie algebras of the subalgebra-conjugation maps R^{2m} -> R^{2m-n}.
const std::vector<FibrationRow>& fibration_table();

/// Throws UnclassifiedSpec if no row matches.
FibrationInfo fibration_table_lookup(int dim, Compactness compactness);

/// Compact when eta is Euclidean; otherwise the fiber is compact iff eta is
/// +1 on every vanishing component.
Compactness compactness_class(const TransformSpec& spec);

/// Throws UnclassifiedSpec outside N = 1 types A, B and dimension-8 C with one
/// vanishing component.
FibrationInfo fibration(const TransformSpec& spec);

}  // namespace hurwitz
