// prints one verdict line per checked claim and fails the process on any miss
#include <cstdio>
#include <cstdlib>

#include "towerset/suites.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260814ull;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  auto suites = tws::run_all_suites(seed);
  bool all = true;
  int idx = 0;
  for (const auto& s : suites) {
    ++idx;
    all = all && s.pass;
    std::printf("criterion %d %-24s %s  cases=%lld  %.2fs%s%s\n", idx, s.name.c_str(),
                s.pass ? "PASS" : "FAIL", s.cases, s.seconds, s.detail.empty() ? "" : "  ",
                s.detail.c_str());
  }
  std::printf("%s\n", all ? "acceptance: all criteria hold" : "acceptance: FAILURES above");
  return all ? 0 : 1;
}
