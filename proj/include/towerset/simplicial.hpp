#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace tws {

// abstract simplicial complex on vertices 0..nv-1, faces stored as bitmasks
// grouped by cardinality; the empty face is implicit
struct SimplicialComplex {
  int nv = 0;
  std::vector<std::vector<std::uint64_t>> faces;  // faces[k] = k+1 vertex faces, sorted

  int top_card() const { return static_cast<int>(faces.size()); }
};

// all faces within vertex mask sigma avoiding every forbidden support
SimplicialComplex complex_from_nonfaces(std::uint64_t sigma,
                                        const std::vector<std::uint64_t>& forbidden);

// nerve of the cover by the given sets (nonempty, pairwise distinct masks)
SimplicialComplex nerve_complex(const std::vector<std::uint64_t>& cover);

// reduced rational Betti numbers; entry d+1 holds dim H~_d, d = -1 .. top-2
std::vector<long long> reduced_homology(const SimplicialComplex& k);

// rank over the rationals of a sparse integer matrix given by rows
long long sparse_rank(std::vector<std::vector<std::pair<int, long long>>> rows);

}  // namespace tws
