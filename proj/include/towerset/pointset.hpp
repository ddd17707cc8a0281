#pragma once

#include <vector>

#include "towerset/monomial.hpp"

namespace tws {

using Point = std::vector<int>;

// finite subset of Z_+^c, kept sorted lexicographically
struct PointSet {
  int c = 0;
  std::vector<Point> pts;

  bool empty() const { return pts.empty(); }
  bool contains(const Point& p) const;
  bool is_starred() const;  // no repeated coordinate inside a point
};

PointSet make_point_set(int c, std::vector<Point> pts);

// values occurring in coordinate i (1-based), ascending
std::vector<int> projection(const PointSet& s, int i);

// points whose last t coordinates equal tail, with those coordinates dropped
PointSet slice(const PointSet& s, const Point& tail);

bool is_tower_set(const PointSet& s);
PointSet sigma_hash(const PointSet& t);

bool is_left_segment(const PointSet& l);
PointSet left_segment_generators(const PointSet& l);
Point segment_size(const PointSet& l);
std::vector<long long> h_vector_of_segment(const PointSet& l);
PointSet downward_closure(int c, const std::vector<Point>& gens);

// degrees d[i-1][j-1] = d_ij, row i serving coordinate i
struct DegreeTable {
  std::vector<std::vector<int>> d;
};

DegreeTable all_ones_table(const Point& size);
PointSet scale_segment(const PointSet& l, const DegreeTable& d);
PointSet star_configuration(int s, int c);

// family i as a dense list indexed by symbol: fam[i-1][j-1] belongs to j
using Family = std::vector<Monomial>;

MonomialIdeal tower_scheme_ideal(const PointSet& t, const std::vector<Family>& fams, int n);
std::vector<long long> tower_h_vector(const PointSet& t, const DegreeTable& d);

// families of fresh pairwise disjoint squarefree monomials whose degrees
// follow the table along the slice filtration of t
struct Realization {
  int n = 0;
  std::vector<Family> fams;
};

Realization realize_degree_table(const PointSet& t, const DegreeTable& d);

}  // namespace tws
