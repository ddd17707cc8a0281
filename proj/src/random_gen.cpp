#include "towerset/random_gen.hpp"

#include <algorithm>
#include <set>

#include "towerset/common.hpp"

namespace tws {

int draw(Rng& rng, int lo, int hi) {
  check_invariant(lo <= hi, "empty draw range");
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

std::vector<int> draw_subset(Rng& rng, const std::vector<int>& pool, int want) {
  std::vector<int> shuffled = pool;
  for (int i = (int)shuffled.size() - 1; i > 0; --i)
    std::swap(shuffled[i], shuffled[draw(rng, 0, i)]);
  want = std::min<int>(want, (int)shuffled.size());
  shuffled.resize(want);
  std::sort(shuffled.begin(), shuffled.end());
  return shuffled;
}

// planar tower: nested first-coordinate sets down a chain of columns
PointSet random_planar_tower(Rng& rng, int max_coord, int max_points) {
  while (true) {
    std::vector<int> pool(max_coord);
    for (int i = 0; i < max_coord; ++i) pool[i] = i + 1;
    int k = draw(rng, 1, std::min(3, max_coord));
    std::vector<int> cols = draw_subset(rng, pool, k);
    std::vector<int> a = draw_subset(rng, pool, draw(rng, 1, 4));
    std::vector<Point> pts;
    for (int idx = 0; idx < (int)cols.size(); ++idx) {
      for (int v : a) pts.push_back({v, cols[idx]});
      if ((int)a.size() > 1 && draw(rng, 0, 1)) a.resize(a.size() - 1);
    }
    if ((int)pts.size() > max_points) continue;
    PointSet t = make_point_set(2, std::move(pts));
    if (is_tower_set(t)) return t;
  }
}

}  // namespace

PointSet random_sub_tower(Rng& rng, const PointSet& t, int drops) {
  PointSet cur = t;
  for (int step = 0; step < drops && (int)cur.pts.size() > 1; ++step) {
    std::vector<int> order(cur.pts.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    for (int i = (int)order.size() - 1; i > 0; --i)
      std::swap(order[i], order[draw(rng, 0, i)]);
    bool removed = false;
    for (int idx : order) {
      std::vector<Point> rest;
      for (size_t i = 0; i < cur.pts.size(); ++i)
        if ((int)i != idx) rest.push_back(cur.pts[i]);
      PointSet cand = make_point_set(cur.c, std::move(rest));
      if (is_tower_set(cand)) {
        cur = std::move(cand);
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
  return cur;
}

PointSet random_tower_set(Rng& rng, int c, int max_coord, int max_points) {
  require(c == 2 || c == 3, "BadParameters", "generator covers widths two and three");
  if (c == 2) return random_planar_tower(rng, max_coord, max_points);
  std::vector<int> pool(max_coord);
  for (int i = 0; i < max_coord; ++i) pool[i] = i + 1;
  while (true) {
    PointSet base = random_planar_tower(rng, max_coord, max_points);
    std::vector<int> levels = draw_subset(rng, pool, draw(rng, 1, 2));
    std::vector<Point> pts;
    PointSet layer = base;
    for (int idx = 0; idx < (int)levels.size(); ++idx) {
      if (idx > 0) layer = random_sub_tower(rng, layer, draw(rng, 1, 3));
      for (const Point& p : layer.pts) pts.push_back({p[0], p[1], levels[idx]});
    }
    if ((int)pts.size() > max_points) continue;
    PointSet t = make_point_set(3, std::move(pts));
    check_invariant(is_tower_set(t), "layered chain lost the tower property");
    return t;
  }
}

GTSDecomposition random_generalized_tower_set(Rng& rng, int max_coord, int max_points) {
  for (int attempt = 0;; ++attempt) {
    check_invariant(attempt < 500, "generalized tower generator kept failing");
    PointSet t = random_planar_tower(rng, max_coord, max_points);
    if (!t.is_starred()) continue;
    GTSDecomposition d;
    d.t = t;
    d.s0 = make_point_set(2, {});
    std::set<int> used;
    for (const Point& p : t.pts) {
      used.insert(p[0]);
      used.insert(p[1]);
    }
    std::vector<int> pi1 = projection(t, 1), pi2 = projection(t, 2);
    std::vector<int> both;
    std::set_intersection(pi1.begin(), pi1.end(), pi2.begin(), pi2.end(),
                          std::back_inserter(both));
    std::vector<Point> extra;
    if (!both.empty() && draw(rng, 0, 2) > 0) {
      int fresh_count = draw(rng, 1, 2);
      int next_fresh = max_coord + 1;
      for (int f = 0; f < fresh_count; ++f) {
        while (used.count(next_fresh)) ++next_fresh;
        int i = next_fresh++;
        std::vector<int> seeds = draw_subset(rng, both, draw(rng, 1, (int)both.size()));
        std::set<int> cols(seeds.begin(), seeds.end());
        bool ok = true;
        for (bool grew = true; grew && ok;) {
          grew = false;
          for (int j : std::vector<int>(cols.begin(), cols.end()))
            for (int h : f_boundary(t, j)) {
              if (!std::binary_search(both.begin(), both.end(), h)) {
                ok = false;
                break;
              }
              if (cols.insert(h).second) grew = true;
            }
        }
        if (!ok) continue;
        for (int j : cols) extra.push_back({i, j});
      }
    }
    std::vector<Point> all = t.pts;
    all.insert(all.end(), extra.begin(), extra.end());
    if ((int)all.size() > max_points + 4) continue;
    d.s0 = make_point_set(2, std::move(extra));
    d.s = make_point_set(2, std::move(all));
    if (is_generalized_tower_set(d)) return d;
  }
}

StandardFormMatrix random_standard_form(Rng& rng, int r) {
  require(r >= 1, "BadParameters", "r must be positive");
  StandardFormMatrix m;
  m.n = 2 * r;
  m.r = r;
  std::vector<int> vars(2 * r);
  for (int i = 0; i < 2 * r; ++i) vars[i] = i + 1;
  for (int i = 2 * r - 1; i > 0; --i) std::swap(vars[i], vars[draw(rng, 0, i)]);
  for (int j = 1; j <= r; ++j) {
    m.d.push_back(Monomial::variable(m.n, vars[j - 1]));
    m.m.push_back(Monomial::variable(m.n, vars[r + j - 1]));
  }
  m.sigma.resize(r);
  m.sigma[0] = 0;
  if (r >= 2) m.sigma[1] = 1;
  for (int j = 3; j <= r; ++j) m.sigma[j - 1] = draw(rng, m.sigma[j - 2], j - 1);
  validate_standard_form(m);
  return m;
}

StandardFormMatrix random_bidiagonal_form(Rng& rng, int r) {
  StandardFormMatrix m = random_standard_form(rng, r);
  for (int j = 1; j <= r; ++j) m.sigma[j - 1] = j - 1;
  validate_standard_form(m);
  return m;
}

MonomialIdeal random_squarefree_ideal(Rng& rng, int n, int max_gens) {
  require(n >= 1, "BadParameters", "n must be positive");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  int g = draw(rng, 1, max_gens);
  std::vector<Monomial> gens;
  for (int k = 0; k < g; ++k)
    gens.push_back(Monomial::from_support(n, draw_subset(rng, pool, draw(rng, 1, n))));
  return minimize(n, std::move(gens));
}

DegreeTable random_degree_table(Rng& rng, const PointSet& t, int max_degree) {
  DegreeTable d;
  for (int i = 1; i <= t.c; ++i) {
    std::vector<int> row;
    for (size_t k = 0; k < projection(t, i).size(); ++k)
      row.push_back(draw(rng, 1, max_degree));
    d.d.push_back(row);
  }
  return d;
}

}  // namespace tws
