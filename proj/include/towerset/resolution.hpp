#pragma once

#include <vector>

#include "towerset/monomial.hpp"
#include "towerset/zpoly.hpp"

namespace tws {

struct BettiEntry {
  int i = 0;
  std::vector<int> sigma;  // 1-based variables, ascending
  long long value = 0;
};

struct BettiTable {
  int n = 0;
  int pd = 0;
  std::vector<BettiEntry> entries;  // sorted by (i, sigma)

  long long total(int i) const;
};

struct ResolutionOptions {
  int threads = 1;
  // 0 picks the cheaper side per multidegree, 1 forces the restriction,
  // 2 forces the nerve of the facet cover
  int engine = 0;
};

BettiTable betti_numbers(const MonomialIdeal& i, const ResolutionOptions& opts = {});
int projective_dimension(const MonomialIdeal& i, const ResolutionOptions& opts = {});
bool is_acm(const MonomialIdeal& i, const ResolutionOptions& opts = {});

// Betti numbers read off the Taylor complex; independent route, g <= 16
BettiTable taylor_betti(const MonomialIdeal& i);
int taylor_pd_oracle(const MonomialIdeal& i);

// alternating sum of the table against t^|sigma|, equals the numerator
ZPoly euler_numerator(const BettiTable& t);

}  // namespace tws
