#pragma once

#include <optional>
#include <string>
#include <utility>

#include "towerset/gentower.hpp"
#include "towerset/monomial.hpp"
#include "towerset/pointset.hpp"

namespace tws {

// (r+1) x r matrix over k[x_1..x_n] with two monomial entries per column:
// D_j on the diagonal (j,j) and M_j at (sigma(j), j), rows indexed 0..r
struct StandardFormMatrix {
  int n = 0;
  int r = 0;
  std::vector<Monomial> d;      // d[j-1] = D_j
  std::vector<Monomial> m;      // m[j-1] = M_j
  std::vector<int> sigma;       // sigma[j-1] = row of M_j
};

// shape checks: sigma(1)=0, sigma(2)=1, sigma(j) < j nondecreasing from
// column two on, every entry a nonconstant monomial in the right ring
void validate_standard_form(const StandardFormMatrix& m);

// orbit {j, sigma(j), sigma^2(j), ..., 1}, ascending
std::vector<int> m_set(const StandardFormMatrix& m, int j);

// f_0..f_r by the closed product formula over m-sets
std::vector<Monomial> generators_from_matrix(const StandardFormMatrix& m);

MonomialIdeal ideal_from_matrix(const StandardFormMatrix& m);

// spanning tree of the generators weighted by lcm, root at the least leaf,
// columns breadth first; the result always regenerates the input generators
StandardFormMatrix standard_form_from_ideal(const MonomialIdeal& i);

struct USets {
  int r = 0;
  std::vector<std::pair<int, int>> u1;  // {i,j}, i < j <= r, i outside m(j)
  std::vector<std::pair<int, int>> u2;  // {i,j}, i <= r < j, j-r in m(i)
  PrimeSupport all;                     // their union over symbols [2r]
};

USets u_sets(const StandardFormMatrix& m);

// joint mu recursion for all columns, materialized until every row vanishes
struct MuTable {
  int r = 0;
  int levels = 0;
  std::vector<std::vector<int>> mu;    // mu[i-1][h]
  std::vector<std::vector<int>> rseq;  // rseq[i-1][h]
};

MuTable mu_table(const StandardFormMatrix& m);
std::vector<int> mu_sequence(const StandardFormMatrix& m, int i);

struct OrientResult {
  std::vector<int> tau;                          // tau[k-1], permutation of [2r]
  std::vector<std::pair<int, int>> omega_t;      // oriented tower part, before tau
  std::vector<std::pair<int, int>> omega_s0;     // oriented remainder, before tau
  GTSDecomposition d;                            // relabeled decomposition
};

OrientResult orient_and_sort(const StandardFormMatrix& m);

// f1 over [2r] and f2 over [r] read off the matrix through tau
std::pair<Family, Family> families_from_matrix(const StandardFormMatrix& m,
                                               const std::vector<int>& tau);

struct CharacterizationReport {
  bool acm = false;
  int height = 0;
  bool equidimensional = false;
  std::optional<StandardFormMatrix> matrix;
  std::optional<USets> usets;
  std::optional<MuTable> mu;
  std::optional<OrientResult> orient;
  std::optional<Family> f1;
  std::optional<Family> f2;
  std::optional<MonomialIdeal> rebuilt;
  std::optional<PrimeSupport> support;
  bool verified = false;
  std::string conclusion;
};

// the two-way check: aCM ideals run the whole constructive pipeline and must
// come back equal; the rest must admit no generalized tower structure
CharacterizationReport verify_characterization(const MonomialIdeal& i,
                                               const SearchOptions& opts = {});

}  // namespace tws
