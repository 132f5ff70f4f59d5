#pragma once

// The cross-check matrix behind `tul verify`: closed forms vs enumeration vs
// the exact Gaussian mean vs Monte Carlo at the smallest scale.

#include <cstdint>
#include <string>
#include <vector>

#include "tul/asymptotics.hpp"

namespace tul {

struct VerifySuiteConfig {
  int max_k = 5;
  int max_D = 5;
  std::vector<Family> families{Family::cycle_11, Family::cycle_mm, Family::cycle_mn,
                               Family::melonic};
  std::uint64_t seed = 0;
  int threads = 1;
  /// Monte Carlo samples per Wick check.
  std::size_t samples = 2000;
};

/// Throws InvalidArgument for max_k above the enumeration cap, max_k < 1,
/// max_D < 2, an empty or generic family list.
void validate(const VerifySuiteConfig& config, int cap);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// One (1,1)-cycle row: minimal-covering count and (0,1)-face histogram.
struct CatalanRow {
  int k = 0;
  std::size_t count = 0;
  std::string catalan;
  std::vector<std::size_t> histogram;
  std::vector<std::string> narayana;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  std::vector<CatalanRow> catalan_rows;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
};

VerifySummary run_verify(const VerifySuiteConfig& config);

}  // namespace tul
