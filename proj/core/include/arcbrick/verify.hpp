#pragma once

// Cross-checks between independent computations, grouped into suites.
//
// Every check walks n = 1..max_n and, within each n, its cases in a fixed
// order; it stops at the first failure, so the reported counterexample is
// the smallest one in that order. Ranks above kMaxFullCheckRank are sampled
// with a fixed seed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arcbrick {

inline constexpr int kMaxFullCheckRank = 4;
inline constexpr int kMaxCheckRank = 5;

struct CheckResult {
  std::string suite;
  std::string name;
  int max_n = 0;            // largest rank actually visited
  std::uint64_t cases = 0;  // cases examined
  bool sampled = false;     // some rank was sampled rather than exhausted
  bool passed = true;
  std::string counterexample;
};

/// "bijection", "homs", "mutation", "order", "quotients".
const std::vector<std::string>& suite_names();

/// `suite` is one of suite_names() or "all". Throws ParseError for an unknown
/// suite, PreconditionError for max_n < 1 and CapExceeded above
/// kMaxCheckRank.
std::vector<CheckResult> run_checks(std::string_view suite, int max_n,
                                    std::uint64_t seed = 20240601);

}  // namespace arcbrick
