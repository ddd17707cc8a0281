// wall-clock comparison of the parallel kernels against their serial references
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "towerset/gentower.hpp"
#include "towerset/hilbert_burch.hpp"
#include "towerset/monomial.hpp"
#include "towerset/random_gen.hpp"
#include "towerset/resolution.hpp"

using Clock = std::chrono::steady_clock;

static double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 4;

  tws::Rng rng(7);
  std::vector<tws::MonomialIdeal> ideals;
  for (int k = 0; k < 24; ++k) ideals.push_back(tws::random_squarefree_ideal(rng, 9, 10));

  tws::ResolutionOptions serial, parallel;
  serial.threads = 1;
  parallel.threads = threads;

  long long check1 = 0, check2 = 0;
  auto t0 = Clock::now();
  for (const auto& i : ideals) check1 += tws::projective_dimension(i, serial);
  double sec_serial = since(t0);
  t0 = Clock::now();
  for (const auto& i : ideals) check2 += tws::projective_dimension(i, parallel);
  double sec_parallel = since(t0);
  std::printf("betti numbers     serial %.3fs   threads=%d %.3fs   %s\n", sec_serial, threads,
              sec_parallel, check1 == check2 ? "results agree" : "RESULTS DIFFER");

  std::vector<tws::PrimeSupport> supports;
  for (int k = 0; k < 40; ++k) {
    tws::StandardFormMatrix m = tws::random_bidiagonal_form(rng, 4);
    supports.push_back(tws::u_sets(m).all);
  }
  tws::SearchOptions smart, brute;
  smart.threads = threads;
  int hit1 = 0, hit2 = 0;
  t0 = Clock::now();
  for (const auto& u : supports) hit1 += tws::is_towerizable(u, smart).has_value();
  double sec_smart = since(t0);
  t0 = Clock::now();
  for (const auto& u : supports) hit2 += tws::is_towerizable_brute(u, brute).has_value();
  double sec_brute = since(t0);
  std::printf("relabeling search pruned %.3fs   literal %.3fs   %s\n", sec_smart, sec_brute,
              hit1 == hit2 ? "results agree" : "RESULTS DIFFER");
  return (check1 == check2 && hit1 == hit2) ? 0 : 1;
}
