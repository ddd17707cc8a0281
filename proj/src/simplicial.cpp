#include "towerset/simplicial.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <unordered_map>

#include "towerset/common.hpp"

namespace tws {

namespace {

constexpr std::size_t kFaceCap = 4000000;

void grow_faces(std::uint64_t face, std::uint64_t candidates,
                const std::vector<std::uint64_t>& forbidden,
                std::vector<std::vector<std::uint64_t>>& out, int card) {
  std::uint64_t rest = candidates;
  while (rest) {
    std::uint64_t bit = rest & (~rest + 1);
    rest ^= bit;
    std::uint64_t next = face | bit;
    bool ok = true;
    for (std::uint64_t f : forbidden)
      if ((f & ~next) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if ((int)out.size() < card + 1) out.resize(card + 1);
    out[card].push_back(next);
    check_invariant(out[card].size() < kFaceCap, "face enumeration exceeded cap");
    grow_faces(next, rest, forbidden, out, card + 1);
  }
}

}  // namespace

SimplicialComplex complex_from_nonfaces(std::uint64_t sigma,
                                        const std::vector<std::uint64_t>& forbidden) {
  SimplicialComplex k;
  std::vector<int> verts;
  for (int v = 0; v < 64; ++v)
    if (sigma & (1ull << v)) verts.push_back(v);
  k.nv = 64;
  // a single vertex may already be forbidden
  std::vector<std::vector<std::uint64_t>> out;
  grow_faces(0, sigma, forbidden, out, 0);
  k.faces = std::move(out);
  for (auto& level : k.faces) std::sort(level.begin(), level.end());
  return k;
}

namespace {

void grow_nerve(std::uint64_t face, int from, std::uint64_t meet,
                const std::vector<std::uint64_t>& cover,
                std::vector<std::vector<std::uint64_t>>& out, int card) {
  for (int v = from; v < (int)cover.size(); ++v) {
    std::uint64_t next_meet = meet & cover[v];
    if (next_meet == 0) continue;
    std::uint64_t next = face | (1ull << v);
    if ((int)out.size() < card + 1) out.resize(card + 1);
    out[card].push_back(next);
    check_invariant(out[card].size() < kFaceCap, "nerve enumeration exceeded cap");
    grow_nerve(next, v + 1, next_meet, cover, out, card + 1);
  }
}

}  // namespace

SimplicialComplex nerve_complex(const std::vector<std::uint64_t>& cover) {
  SimplicialComplex k;
  k.nv = static_cast<int>(cover.size());
  std::vector<std::vector<std::uint64_t>> out;
  grow_nerve(0, 0, ~0ull, cover, out, 0);
  k.faces = std::move(out);
  for (auto& level : k.faces) std::sort(level.begin(), level.end());
  return k;
}

namespace {

struct needs_bigint {};

template <class I>
I int_abs(const I& v) {
  return v < 0 ? I(-v) : v;
}

template <class I>
I int_gcd(I a, I b) {
  a = int_abs(a);
  b = int_abs(b);
  while (b != 0) {
    I r = a % b;
    a = b;
    b = r;
  }
  return a;
}

template <class I>
I mul_checked(const I& a, const I& b);

template <>
long long mul_checked<long long>(const long long& a, const long long& b) {
  __int128 p = static_cast<__int128>(a) * b;
  if (p > static_cast<__int128>(INT64_MAX) || p < static_cast<__int128>(INT64_MIN))
    throw needs_bigint{};
  return static_cast<long long>(p);
}

using bigint = boost::multiprecision::cpp_int;

template <>
bigint mul_checked<bigint>(const bigint& a, const bigint& b) {
  return a * b;
}

template <class I>
using SparseRow = std::vector<std::pair<int, I>>;

template <class I>
void gcd_reduce(SparseRow<I>& row) {
  I g = 0;
  for (auto& [c, v] : row) g = int_gcd<I>(g, v);
  if (g > 1)
    for (auto& [c, v] : row) v /= g;
}

// eliminate with rows scaled over the integers; row scaling keeps the rank
template <class I>
long long rank_rows(std::vector<SparseRow<I>>& rows) {
  long long rank = 0;
  std::vector<char> done(rows.size(), 0);
  // column fill counts guide the pivot choice
  std::unordered_map<int, int> colcount;
  for (auto& r : rows)
    for (auto& [c, v] : r) colcount[c]++;
  while (true) {
    int best = -1;
    size_t best_key = SIZE_MAX;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      size_t key = rows[i].size();
      if (key < best_key) {
        best_key = key;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    // inside the chosen row prefer the sparsest column
    int pcol = rows[best][0].first;
    int pfill = INT32_MAX;
    for (auto& [c, v] : rows[best]) {
      int fill = colcount[c];
      if (fill < pfill) {
        pfill = fill;
        pcol = c;
      }
    }
    I pval = 0;
    for (auto& [c, v] : rows[best])
      if (c == pcol) pval = v;
    done[best] = 1;
    rank++;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (done[i] || rows[i].empty()) continue;
      I rval = 0;
      for (auto& [c, v] : rows[i])
        if (c == pcol) rval = v;
      if (rval == 0) continue;
      SparseRow<I> next;
      next.reserve(rows[i].size() + rows[best].size());
      size_t a = 0, b = 0;
      const auto& ra = rows[i];
      const auto& rb = rows[best];
      while (a < ra.size() || b < rb.size()) {
        int ca = a < ra.size() ? ra[a].first : INT32_MAX;
        int cb = b < rb.size() ? rb[b].first : INT32_MAX;
        if (ca < cb) {
          next.emplace_back(ca, mul_checked<I>(pval, ra[a].second));
          ++a;
        } else if (cb < ca) {
          next.emplace_back(cb, mul_checked<I>(I(0) - rval, rb[b].second));
          ++b;
        } else {
          I v = mul_checked<I>(pval, ra[a].second);
          I w = mul_checked<I>(rval, rb[b].second);
          I d = v - w;
          if (d != 0) next.emplace_back(ca, d);
          ++a;
          ++b;
        }
      }
      gcd_reduce(next);
      for (auto& [c, v] : ra) colcount[c]--;
      for (auto& [c, v] : next) colcount[c]++;
      rows[i] = std::move(next);
    }
  }
  return rank;
}

}  // namespace

long long sparse_rank(std::vector<std::vector<std::pair<int, long long>>> rows) {
  for (auto& r : rows) {
    std::sort(r.begin(), r.end());
    gcd_reduce(r);
  }
  std::vector<SparseRow<long long>> work = rows;
  try {
    return rank_rows(work);
  } catch (const needs_bigint&) {
    std::vector<SparseRow<bigint>> wide(rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (auto& [c, v] : rows[i]) wide[i].emplace_back(c, bigint(v));
    return rank_rows(wide);
  }
}

namespace {

// boundary matrix rows indexed by the smaller faces
std::vector<std::vector<std::pair<int, long long>>> boundary_rows(
    const std::vector<std::uint64_t>& lower, const std::vector<std::uint64_t>& upper) {
  std::unordered_map<std::uint64_t, int> pos;
  pos.reserve(lower.size() * 2);
  for (size_t i = 0; i < lower.size(); ++i) pos[lower[i]] = static_cast<int>(i);
  std::vector<std::vector<std::pair<int, long long>>> rows(lower.size());
  for (size_t j = 0; j < upper.size(); ++j) {
    std::uint64_t f = upper[j];
    int sign = 1;
    std::uint64_t rest = f;
    while (rest) {
      std::uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      auto it = pos.find(f ^ bit);
      check_invariant(it != pos.end(), "missing boundary face");
      rows[it->second].emplace_back(static_cast<int>(j), sign);
      sign = -sign;
    }
  }
  return rows;
}

}  // namespace

std::vector<long long> reduced_homology(const SimplicialComplex& k) {
  int top = k.top_card();
  // ranks[d] = rank of the boundary map from card-d faces, d = 1..top
  std::vector<long long> ranks(top + 2, 0);
  if (top >= 1 && !k.faces[0].empty()) ranks[1] = 1;  // augmentation
  for (int d = 2; d <= top; ++d) {
    auto rows = boundary_rows(k.faces[d - 2], k.faces[d - 1]);
    ranks[d] = sparse_rank(std::move(rows));
  }
  std::vector<long long> h(top + 1, 0);
  // dim H~_{-1}
  h[0] = 1 - ranks[1];
  for (int d = 1; d <= top; ++d)
    h[d] = static_cast<long long>(k.faces[d - 1].size()) - ranks[d] - ranks[d + 1];
  return h;
}

}  // namespace tws
