#include "towerset/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "towerset/common.hpp"
#include "towerset/simplicial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tws {

long long BettiTable::total(int i) const {
  long long s = 0;
  for (const auto& e : entries)
    if (e.i == i) s += e.value;
  return s;
}

namespace {

std::vector<int> mask_to_vars(std::uint64_t m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (m & (1ull << v)) out.push_back(v + 1);
  return out;
}

void validate_squarefree_proper(const MonomialIdeal& i) {
  require(!i.is_zero(), "BadParameters", "zero ideal");
  require(i.n >= 1 && i.n <= 64, "BadParameters", "ambient size out of range");
  for (const Monomial& g : i.gens) {
    require(g.is_squarefree(), "NotSquarefree", "generator is not squarefree");
    require(!g.is_one(), "BadParameters", "unit ideal");
  }
}

// union-closed family generated by the generator supports
std::vector<std::uint64_t> lcm_lattice(const std::vector<std::uint64_t>& supports) {
  std::set<std::uint64_t> seen(supports.begin(), supports.end());
  std::vector<std::uint64_t> queue(seen.begin(), seen.end());
  for (size_t q = 0; q < queue.size(); ++q) {
    for (std::uint64_t s : supports) {
      std::uint64_t u = queue[q] | s;
      if (seen.insert(u).second) queue.push_back(u);
    }
    check_invariant(queue.size() <= 2000000, "lcm lattice exceeded cap");
  }
  return {seen.begin(), seen.end()};
}

// reduced homology of the restriction to sigma, or empty when a cone is found
std::vector<long long> homology_at(std::uint64_t sigma,
                                   const std::vector<std::uint64_t>& supports,
                                   const std::vector<std::uint64_t>& primes,
                                   int engine) {
  std::vector<std::uint64_t> local;
  std::uint64_t covered = 0;
  for (std::uint64_t s : supports)
    if ((s & ~sigma) == 0) {
      local.push_back(s);
      covered |= s;
    }
  // any vertex outside every local support cones the restriction off
  if ((sigma & ~covered) != 0) return {};
  // maximal distinct complements form the facet cover
  std::vector<std::uint64_t> comp;
  for (std::uint64_t p : primes) comp.push_back(sigma & ~p);
  std::sort(comp.begin(), comp.end());
  comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
  std::vector<std::uint64_t> facets;
  for (std::uint64_t c : comp) {
    bool maximal = true;
    for (std::uint64_t d : comp)
      if (c != d && (c & ~d) == 0) {
        maximal = false;
        break;
      }
    if (maximal && c != 0) facets.push_back(c);
  }
  if (facets.empty()) {
    // only the empty face survives the restriction
    return {1};
  }
  if (facets.size() == 1) return {};  // a simplex plus possible ghost vertices
  int nv = __builtin_popcountll(sigma);
  bool use_nerve = facets.size() < static_cast<size_t>(nv);
  if (engine == 1) use_nerve = false;
  if (engine == 2) use_nerve = true;
  if (use_nerve) {
    // homotopy equivalent to the restriction, usually far smaller
    return reduced_homology(nerve_complex(facets));
  }
  SimplicialComplex k = complex_from_nonfaces(sigma, local);
  return reduced_homology(k);
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& i, const ResolutionOptions& opts) {
  validate_squarefree_proper(i);
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : i.gens) supports.push_back(g.support_mask());
  auto primes_list = minimal_primes(i);
  std::vector<std::uint64_t> primes;
  for (const auto& p : primes_list) {
    std::uint64_t m = 0;
    for (int v : p) m |= 1ull << (v - 1);
    primes.push_back(m);
  }
  std::vector<std::uint64_t> sigmas = lcm_lattice(supports);
  std::vector<std::vector<long long>> results(sigmas.size());
  int nthreads = std::max(1, opts.threads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (nthreads > 1)
#endif
  for (long long s = 0; s < (long long)sigmas.size(); ++s)
    results[s] = homology_at(sigmas[s], supports, primes, opts.engine);

  BettiTable t;
  t.n = i.n;
  t.entries.push_back(BettiEntry{0, {}, 1});
  for (size_t s = 0; s < sigmas.size(); ++s) {
    std::uint64_t sigma = sigmas[s];
    int card = __builtin_popcountll(sigma);
    const auto& h = results[s];
    for (int d = 0; d < (int)h.size(); ++d) {
      if (h[d] == 0) continue;
      int hi = card - (d - 1) - 1;  // homological index from H~_{d-1}
      if (hi >= 1) t.entries.push_back(BettiEntry{hi, mask_to_vars(sigma), h[d]});
    }
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.sigma < b.sigma;
  });
  t.pd = 0;
  for (const auto& e : t.entries) t.pd = std::max(t.pd, e.i);
  return t;
}

int projective_dimension(const MonomialIdeal& i, const ResolutionOptions& opts) {
  return betti_numbers(i, opts).pd;
}

bool is_acm(const MonomialIdeal& i, const ResolutionOptions& opts) {
  auto [h, equi] = height_and_equidimensional(i);
  if (!equi) return false;
  return projective_dimension(i, opts) == h;
}

BettiTable taylor_betti(const MonomialIdeal& i) {
  validate_squarefree_proper(i);
  int g = static_cast<int>(i.gens.size());
  require(g <= 16, "TooManyGenerators", "Taylor route supports at most 16 generators");
  std::vector<std::uint64_t> supports;
  for (const Monomial& m : i.gens) supports.push_back(m.support_mask());
  // subsets grouped by their lcm support
  std::vector<std::uint64_t> lcm_of(1ull << g, 0);
  for (std::uint32_t s = 1; s < (1u << g); ++s) {
    std::uint32_t low = s & (~s + 1);
    int idx = __builtin_ctz(low);
    lcm_of[s] = lcm_of[s ^ low] | supports[idx];
  }
  std::map<std::uint64_t, std::map<int, std::vector<std::uint32_t>>> blocks;
  for (std::uint32_t s = 1; s < (1u << g); ++s)
    blocks[lcm_of[s]][__builtin_popcount(s)].push_back(s);

  BettiTable t;
  t.n = i.n;
  t.entries.push_back(BettiEntry{0, {}, 1});
  for (auto& [sigma, by_card] : blocks) {
    // rank of the multigraded differential leaving card k
    std::map<int, long long> rk;
    for (auto& [k, subsets] : by_card) {
      if (k < 2) {
        rk[k] = 0;  // differentials into cardinality 0 vanish after tensoring
        continue;
      }
      std::map<std::uint32_t, int> pos;
      if (by_card.count(k - 1))
        for (size_t p = 0; p < by_card[k - 1].size(); ++p) pos[by_card[k - 1][p]] = (int)p;
      std::vector<std::vector<std::pair<int, long long>>> rows(pos.size());
      bool any = false;
      for (size_t j = 0; j < subsets.size(); ++j) {
        std::uint32_t sub = subsets[j];
        int sign = 1;
        std::uint32_t rest = sub;
        while (rest) {
          std::uint32_t bit = rest & (~rest + 1);
          rest ^= bit;
          std::uint32_t smaller = sub ^ bit;
          if (lcm_of[smaller] == sigma) {
            auto it = pos.find(smaller);
            check_invariant(it != pos.end(), "Taylor block misses a subset");
            rows[it->second].emplace_back((int)j, sign);
            any = true;
          }
          sign = -sign;
        }
      }
      rk[k] = any ? sparse_rank(std::move(rows)) : 0;
    }
    for (auto& [k, subsets] : by_card) {
      long long out = rk.count(k) ? rk[k] : 0;
      long long in = rk.count(k + 1) ? rk[k + 1] : 0;
      long long beta = static_cast<long long>(subsets.size()) - out - in;
      if (beta != 0) t.entries.push_back(BettiEntry{k, mask_to_vars(sigma), beta});
    }
  }
  std::sort(t.entries.begin(), t.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.sigma < b.sigma;
  });
  t.pd = 0;
  for (const auto& e : t.entries) t.pd = std::max(t.pd, e.i);
  return t;
}

int taylor_pd_oracle(const MonomialIdeal& i) { return taylor_betti(i).pd; }

ZPoly euler_numerator(const BettiTable& t) {
  ZPoly p;
  for (const auto& e : t.entries) {
    int d = static_cast<int>(e.sigma.size());
    ZPoly term;
    term.c.assign(d + 1, 0);
    term.c[d] = (e.i % 2 == 0) ? e.value : -e.value;
    p += term;
  }
  return p;
}

}  // namespace tws
