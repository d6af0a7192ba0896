// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.
#include <cstdlib>
#include <iostream>
#include <string>

#include "hurwitz/selftest.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = hurwitz::kDefaultSelftestSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failed = 0;
  hurwitz::run_selftest(seed, [&](const hurwitz::CriterionResult& r) {
    if (!r.passed) ++failed;
    std::cout << hurwitz::format_result(r) << std::endl;
  });
  std::cout << (hurwitz::kCriterionCount - failed) << "/" << hurwitz::kCriterionCount << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
