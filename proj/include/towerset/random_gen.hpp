#pragma once

#include <cstdint>
#include <random>

#include "towerset/gentower.hpp"
#include "towerset/hilbert_burch.hpp"
#include "towerset/pointset.hpp"

namespace tws {

using Rng = std::mt19937_64;

// bounded draw independent of any distribution implementation
int draw(Rng& rng, int lo, int hi);

PointSet random_tower_set(Rng& rng, int c, int max_coord, int max_points);
// drops random points one at a time while the tower property survives
PointSet random_sub_tower(Rng& rng, const PointSet& t, int drops);
// starred planar tower plus a closed random remainder, always valid
GTSDecomposition random_generalized_tower_set(Rng& rng, int max_coord, int max_points);

StandardFormMatrix random_standard_form(Rng& rng, int r);
StandardFormMatrix random_bidiagonal_form(Rng& rng, int r);

MonomialIdeal random_squarefree_ideal(Rng& rng, int n, int max_gens);

// one degree entry per occurring symbol layer of each coordinate
DegreeTable random_degree_table(Rng& rng, const PointSet& t, int max_degree);

}  // namespace tws
