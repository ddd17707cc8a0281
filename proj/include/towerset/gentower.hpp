#pragma once

#include <optional>
#include <utility>

#include "towerset/monomial.hpp"
#include "towerset/pointset.hpp"

namespace tws {

// forgetful map: ordered pairs to unordered supports
PrimeSupport forgetful(const PointSet& s, int n = 0);

PointSet colon_points(const PointSet& s, int h);
PrimeSupport colon_support(const PrimeSupport& u, int h);

// columns whose slice strictly contains the slice of h without the joint point
std::vector<int> f_boundary(const PointSet& t, int h);

bool is_connected(const PrimeSupport& u);
bool is_connected(const PointSet& s);

struct GTSDecomposition {
  PointSet s;
  PointSet t;
  PointSet s0;
};

enum class GtsFail {
  none,
  not_starred,
  not_partition,
  empty_tower,
  not_tower,
  disconnected,
  s0_first_symbol_reused,
  s0_column_outside,
  f_closure_broken,
};

const char* gts_fail_name(GtsFail f);

bool is_generalized_tower_set(const GTSDecomposition& d, GtsFail* why = nullptr);

struct SearchOptions {
  int threads = 1;
  int max_symbols = 9;
  int max_pairs = 12;
  int decomposition_cap = 14;
  // 0 follows each definition scope, 1 permutes all symbols, 2 only pi_2
  int tau_scope = 0;
};

// smallest valid decomposition of s with the tower part least in point order
std::optional<GTSDecomposition> find_gts_decomposition(const PointSet& s, int cap = 14);

struct TowerizeWitness {
  std::vector<std::pair<int, int>> tau;  // occurring symbol, its image
  std::vector<std::pair<std::vector<int>, Point>> omega;
  PointSet image;  // tau(omega(u))
};

std::optional<TowerizeWitness> is_towerizable(const PrimeSupport& u,
                                              const SearchOptions& opts = {});
// literal search used as the cross-check reference
std::optional<TowerizeWitness> is_towerizable_brute(const PrimeSupport& u,
                                                    const SearchOptions& opts = {});

struct GenTowerizeWitness {
  TowerizeWitness w;
  GTSDecomposition decomp;
};

std::optional<GenTowerizeWitness> is_generalized_towerizable(const PrimeSupport& u,
                                                             const SearchOptions& opts = {});

MonomialIdeal generalized_tower_scheme_ideal(const GTSDecomposition& d, const Family& f1,
                                             const Family& f2, int n);

// the point set as an ideal with one variable per symbol
MonomialIdeal support_ideal(const PointSet& s, int n = 0);

}  // namespace tws
