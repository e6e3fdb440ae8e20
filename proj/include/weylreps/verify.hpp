#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylreps {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// One line per check, e.g.
  ///   [algebra] Weyl relation U_a V_b = e^{-iab} V_b U_a: PASS (200 samples, ...)
  /// followed by a summary line. The seed is printed first.
  std::string render() const;
};

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Runs one of "algebra", "reps", "gns", "ap", "oracle" or "all".
/// Throws InvalidArgument for any other name.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed = kDefaultSeed);

std::vector<std::string_view> suite_names();

}  // namespace weylreps
