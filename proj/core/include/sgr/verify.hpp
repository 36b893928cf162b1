#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sgr {

const char* version_string();

// One invariant check: name, verdict, and a short human-readable summary of
// the numbers behind the verdict.
struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::string version;
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

// Run every module's invariants and properties with randomness derived only
// from the seed.  The report is deterministic given the seed.
VerifyReport verify_suite(std::uint64_t seed);

}  // namespace sgr
