#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tws {

struct SuiteResult {
  std::string name;
  bool pass = false;
  long long cases = 0;
  double seconds = 0.0;
  std::string detail;  // empty when passing, otherwise the first failure
};

// the nine checked claims, in order; shared by the acceptance runner and the
// command line selftest
std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

}  // namespace tws
