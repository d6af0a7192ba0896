#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hurwitz {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

inline constexpr int kCriterionCount = 11;
inline constexpr std::uint64_t kDefaultSelftestSeed = 20260101;

/// Runs acceptance criterion id (1 .. kCriterionCount). Never throws: a
/// library exception becomes a failed result carrying its message.
CriterionResult run_criterion(int id, std::uint64_t seed = kDefaultSelftestSeed);

/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_selftest(std::uint64_t seed = kDefaultSelftestSeed,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

/// "PASS  [ 1] title (1.23 s): detail"
std::string format_result(const CriterionResult& r);

}  // namespace hurwitz
