#include "towerset/pointset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "towerset/common.hpp"

namespace tws {

bool PointSet::contains(const Point& p) const {
  return std::binary_search(pts.begin(), pts.end(), p);
}

bool PointSet::is_starred() const {
  for (const Point& p : pts) {
    Point q = p;
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end()) return false;
  }
  return true;
}

PointSet make_point_set(int c, std::vector<Point> pts) {
  require(c >= 1, "BadParameters", "dimension must be positive");
  for (const Point& p : pts) {
    require((int)p.size() == c, "BadParameters", "point of unexpected length");
    for (int v : p) require(v >= 1, "BadParameters", "coordinates must be positive");
  }
  std::sort(pts.begin(), pts.end());
  require(std::adjacent_find(pts.begin(), pts.end()) == pts.end(), "BadParameters",
          "repeated point");
  return PointSet{c, std::move(pts)};
}

std::vector<int> projection(const PointSet& s, int i) {
  require(i >= 1 && i <= s.c, "BadParameters", "projection index out of range");
  std::set<int> vals;
  for (const Point& p : s.pts) vals.insert(p[i - 1]);
  return {vals.begin(), vals.end()};
}

PointSet slice(const PointSet& s, const Point& tail) {
  int t = static_cast<int>(tail.size());
  require(t >= 1 && t < s.c, "BadTailLength", "tail length must be in [1, c-1]");
  PointSet out;
  out.c = s.c - t;
  for (const Point& p : s.pts) {
    if (!std::equal(tail.begin(), tail.end(), p.end() - t)) continue;
    out.pts.emplace_back(p.begin(), p.end() - t);
  }
  return out;
}

namespace {

// occurring suffixes of length t together with their slices
std::map<Point, std::set<Point>> suffix_slices(const PointSet& s, int t) {
  std::map<Point, std::set<Point>> by_tail;
  for (const Point& p : s.pts) {
    Point tail(p.end() - t, p.end());
    Point head(p.begin(), p.end() - t);
    by_tail[tail].insert(head);
  }
  return by_tail;
}

bool strictly_below(const Point& a, const Point& b) {
  if (a == b) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

bool is_tower_set(const PointSet& s) {
  for (int t = 1; t < s.c; ++t) {
    auto by_tail = suffix_slices(s, t);
    for (auto& [beta, sa] : by_tail)
      for (auto& [gamma, sb] : by_tail) {
        if (!strictly_below(beta, gamma)) continue;
        if (!std::includes(sa.begin(), sa.end(), sb.begin(), sb.end())) return false;
      }
  }
  return true;
}

PointSet sigma_hash(const PointSet& t) {
  require(is_tower_set(t), "NotTowerSet", "hash needs a tower set");
  std::vector<Point> hashed;
  for (const Point& p : t.pts) {
    Point h(t.c, 0);
    // first entry counts earlier points in the same slice
    int h1 = 0;
    for (const Point& q : t.pts)
      if (q[0] <= p[0] && std::equal(p.begin() + 1, p.end(), q.begin() + 1)) h1++;
    h[0] = h1;
    for (int j = 2; j <= t.c; ++j) {
      std::set<int> seen;
      for (const Point& q : t.pts)
        if (q[j - 1] <= p[j - 1] && std::equal(p.begin() + j, p.end(), q.begin() + j))
          seen.insert(q[j - 1]);
      h[j - 1] = static_cast<int>(seen.size());
    }
    hashed.push_back(std::move(h));
  }
  PointSet out = make_point_set(t.c, std::move(hashed));
  check_invariant(out.pts.size() == t.pts.size(), "hash map is not injective");
  check_invariant(is_left_segment(out), "hash image is not a left segment");
  return out;
}

bool is_left_segment(const PointSet& l) {
  for (const Point& p : l.pts)
    for (int i = 0; i < l.c; ++i) {
      if (p[i] == 1) continue;
      Point q = p;
      q[i]--;
      if (!l.contains(q)) return false;
    }
  return true;
}

PointSet left_segment_generators(const PointSet& l) {
  require(is_left_segment(l), "NotLeftSegment", "generators need a left segment");
  PointSet out;
  out.c = l.c;
  for (const Point& p : l.pts) {
    bool maximal = true;
    for (const Point& q : l.pts)
      if (strictly_below(p, q)) {
        maximal = false;
        break;
      }
    if (maximal) out.pts.push_back(p);
  }
  return out;
}

Point segment_size(const PointSet& l) {
  require(is_left_segment(l), "NotLeftSegment", "size needs a left segment");
  Point size(l.c, 0);
  for (const Point& p : l.pts)
    for (int i = 0; i < l.c; ++i) size[i] = std::max(size[i], p[i]);
  return size;
}

std::vector<long long> h_vector_of_segment(const PointSet& l) {
  require(is_left_segment(l), "NotLeftSegment", "h-vector needs a left segment");
  std::vector<long long> h;
  for (const Point& p : l.pts) {
    int v = 0;
    for (int x : p) v += x;
    int idx = v - l.c;
    if ((int)h.size() <= idx) h.resize(idx + 1, 0);
    h[idx]++;
  }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

PointSet downward_closure(int c, const std::vector<Point>& gens) {
  std::set<Point> acc;
  for (const Point& g : gens) {
    require((int)g.size() == c, "BadParameters", "generator of unexpected length");
    for (int v : g) require(v >= 1, "BadParameters", "coordinates must be positive");
    Point p(c, 1);
    while (true) {
      acc.insert(p);
      int i = 0;
      while (i < c) {
        if (p[i] < g[i]) {
          p[i]++;
          break;
        }
        p[i] = 1;
        ++i;
      }
      if (i == c) break;
    }
  }
  return make_point_set(c, {acc.begin(), acc.end()});
}

DegreeTable all_ones_table(const Point& size) {
  DegreeTable d;
  for (int s : size) d.d.emplace_back(s, 1);
  return d;
}

PointSet scale_segment(const PointSet& l, const DegreeTable& d) {
  PointSet gens = left_segment_generators(l);
  require((int)d.d.size() == l.c, "DegreeTableTooSmall", "one degree row per coordinate");
  Point size = segment_size(l);
  for (int i = 0; i < l.c; ++i)
    require((int)d.d[i].size() >= size[i], "DegreeTableTooSmall",
            "degree row shorter than the segment size");
  std::vector<Point> scaled;
  for (const Point& g : gens.pts) {
    Point k(l.c, 0);
    for (int i = 0; i < l.c; ++i)
      for (int j = 0; j < g[i]; ++j) k[i] += d.d[i][j];
    scaled.push_back(std::move(k));
  }
  return downward_closure(l.c, scaled);
}

PointSet star_configuration(int s, int c) {
  require(c >= 1 && s >= c, "BadParameters", "star configuration needs 1 <= c <= s");
  std::vector<Point> pts;
  std::vector<int> comb(c);
  // strictly decreasing c-tuples from [s]
  for (int i = 0; i < c; ++i) comb[i] = c - i;
  while (true) {
    pts.emplace_back(comb);
    int i = 0;
    while (i < c && comb[i] == s - i) ++i;
    if (i == c) break;
    comb[i]++;
    for (int j = i - 1; j >= 0; --j) comb[j] = comb[j + 1] + 1;
  }
  return make_point_set(c, std::move(pts));
}

MonomialIdeal tower_scheme_ideal(const PointSet& t, const std::vector<Family>& fams, int n) {
  require(is_tower_set(t), "NotTowerSet", "scheme needs a tower set");
  require(!t.empty(), "BadParameters", "empty support");
  require((int)fams.size() == t.c, "BadParameters", "one family per coordinate");
  for (int i = 1; i <= t.c; ++i) {
    auto occ = projection(t, i);
    for (int j : occ) {
      require((int)fams[i - 1].size() >= j, "BadParameters", "family misses an index");
      const Monomial& f = fams[i - 1][j - 1];
      require(f.n() == n, "MixedAmbient", "family member in a different ring");
      require(!f.is_one(), "BadParameters", "family member of degree zero");
    }
  }
  std::vector<MonomialIdeal> parts;
  for (const Point& p : t.pts) {
    std::vector<Monomial> gens;
    for (int i = 1; i <= t.c; ++i) gens.push_back(fams[i - 1][p[i - 1] - 1]);
    for (size_t a = 0; a < gens.size(); ++a)
      for (size_t b = a + 1; b < gens.size(); ++b)
        require(gens[a].coprime(gens[b]), "GenericityViolation",
                "families " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                    " share a variable at indices " + std::to_string(p[a]) + "," +
                    std::to_string(p[b]));
    parts.push_back(minimize(n, std::move(gens)));
  }
  return intersect_all(n, parts);
}

std::vector<long long> tower_h_vector(const PointSet& t, const DegreeTable& d) {
  return h_vector_of_segment(scale_segment(sigma_hash(t), d));
}

namespace {

// nested value sets seen in coordinate i across the slice filtration
std::vector<std::set<int>> branch_sets(const PointSet& t, int i) {
  std::map<Point, std::set<int>> groups;
  for (const Point& p : t.pts) {
    Point tail(p.begin() + i, p.end());
    groups[tail].insert(p[i - 1]);
  }
  std::vector<std::set<int>> out;
  for (auto& [tail, vals] : groups) out.push_back(vals);
  std::sort(out.begin(), out.end(), [](const std::set<int>& a, const std::set<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Realization realize_degree_table(const PointSet& t, const DegreeTable& d) {
  require(is_tower_set(t), "NotTowerSet", "realization needs a tower set");
  require(!t.empty(), "BadParameters", "empty support");
  require((int)d.d.size() == t.c, "DegreeTableTooSmall", "one degree row per coordinate");
  // rank the occurring symbols of each coordinate along the branch filtration
  std::vector<std::map<int, int>> rank(t.c);
  for (int i = 1; i <= t.c; ++i) {
    auto branches = branch_sets(t, i);
    for (size_t b = 1; b < branches.size(); ++b)
      require(std::includes(branches[b].begin(), branches[b].end(), branches[b - 1].begin(),
                            branches[b - 1].end()),
              "DegreeTableNotRealizable", "branch value sets do not form a chain");
    int next = 1;
    for (const auto& layer : branches)
      for (int v : layer)
        if (!rank[i - 1].count(v)) rank[i - 1][v] = next++;
    require((int)d.d[i - 1].size() >= next - 1, "DegreeTableTooSmall",
            "degree row shorter than the projection");
  }
  Realization out;
  std::vector<Family> fams(t.c);
  int var = 0;
  // count variables first
  for (int i = 1; i <= t.c; ++i)
    for (auto& [sym, rk] : rank[i - 1]) var += d.d[i - 1][rk - 1];
  out.n = var;
  var = 0;
  for (int i = 1; i <= t.c; ++i) {
    auto occ = projection(t, i);
    fams[i - 1].assign(occ.back(), Monomial::one(out.n));
    for (int sym : occ) {
      int deg = d.d[i - 1][rank[i - 1][sym] - 1];
      Monomial m = Monomial::one(out.n);
      for (int k = 0; k < deg; ++k) m.e[var++] = 1;
      fams[i - 1][sym - 1] = m;
    }
  }
  out.fams = std::move(fams);
  return out;
}

}  // namespace tws
