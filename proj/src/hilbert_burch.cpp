#include "towerset/hilbert_burch.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <tuple>

#include "towerset/common.hpp"
#include "towerset/resolution.hpp"

namespace tws {

namespace {

std::string mono_text(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int i = 1; i <= m.n(); ++i)
    for (int k = 0; k < m.e[i - 1]; ++k) s += "x" + std::to_string(i);
  return s;
}

bool in_set(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

void validate_standard_form(const StandardFormMatrix& m) {
  require(m.n >= 1, "BadMatrix", "ring must have at least one variable");
  require(m.r >= 1, "BadMatrix", "matrix needs at least one column");
  require((int)m.d.size() == m.r && (int)m.m.size() == m.r && (int)m.sigma.size() == m.r,
          "BadMatrix", "column data sizes disagree with r");
  require(m.sigma[0] == 0, "BadMatrix", "first column must pair with row zero");
  if (m.r >= 2)
    require(m.sigma[1] == 1, "BadMatrix", "second column must pair with row one");
  for (int j = 1; j <= m.r; ++j) {
    require(m.sigma[j - 1] < j, "BadMatrix", "row index must precede its column");
    if (j >= 3)
      require(m.sigma[j - 1] >= m.sigma[j - 2] && m.sigma[j - 1] >= 1, "BadMatrix",
              "row indices must be nondecreasing and positive from column two");
    for (const Monomial* e : {&m.d[j - 1], &m.m[j - 1]}) {
      require(e->n() == m.n, "BadMatrix", "entry lives in a different ring");
      for (int v : e->e) require(v >= 0, "BadMatrix", "negative exponent");
      require(e->degree() >= 1, "BadMatrix", "constant entry in column " + std::to_string(j));
    }
  }
}

std::vector<int> m_set(const StandardFormMatrix& m, int j) {
  check_invariant(1 <= j && j <= m.r, "m_set column out of range");
  std::vector<int> out;
  int cur = j;
  out.push_back(cur);
  while (cur > 1) {
    cur = m.sigma[cur - 1];
    check_invariant(cur >= 1, "m-set orbit fell off the matrix");
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> generators_from_matrix(const StandardFormMatrix& m) {
  validate_standard_form(m);
  std::vector<Monomial> out;
  Monomial f0 = Monomial::one(m.n);
  for (int j = 1; j <= m.r; ++j) f0 = product(f0, m.d[j - 1]);
  out.push_back(f0);
  for (int i = 1; i <= m.r; ++i) {
    auto ms = m_set(m, i);
    Monomial f = Monomial::one(m.n);
    for (int j = 1; j <= m.r; ++j)
      f = product(f, in_set(ms, j) ? m.m[j - 1] : m.d[j - 1]);
    out.push_back(f);
  }
  return out;
}

MonomialIdeal ideal_from_matrix(const StandardFormMatrix& m) {
  return minimize(m.n, generators_from_matrix(m));
}

StandardFormMatrix standard_form_from_ideal(const MonomialIdeal& i) {
  auto [ht, equi] = height_and_equidimensional(i);
  require(ht == 2, "NotHeightTwo", "ideal has height " + std::to_string(ht));
  require(equi && is_acm(i), "NotACM", "ideal is not arithmetically Cohen-Macaulay");
  const auto& g = i.gens;
  int r = static_cast<int>(g.size()) - 1;
  check_invariant(r >= 1, "height two needs at least two generators");

  // Kruskal over generator pairs keyed by (lcm degree, lcm exponents, pair)
  struct Edge {
    int deg;
    std::vector<int> exps;
    int a, b;
  };
  std::vector<Edge> edges;
  for (int a = 0; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      Monomial l = lcm(g[a], g[b]);
      edges.push_back({l.degree(), l.e, a, b});
    }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.deg, x.exps, x.a, x.b) < std::tie(y.deg, y.exps, y.a, y.b);
  });
  std::vector<int> parent_uf(r + 1);
  std::iota(parent_uf.begin(), parent_uf.end(), 0);
  std::function<int(int)> find = [&](int v) {
    return parent_uf[v] == v ? v : parent_uf[v] = find(parent_uf[v]);
  };
  std::vector<std::vector<int>> adj(r + 1);
  int used = 0;
  for (const Edge& e : edges) {
    int ra = find(e.a), rb = find(e.b);
    if (ra == rb) continue;
    parent_uf[ra] = rb;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
    ++used;
  }
  check_invariant(used == r, "spanning tree construction fell short");

  // root at the least leaf, then breadth first with children in canonical order
  int root = -1;
  for (int v = 0; v <= r; ++v) {
    if (adj[v].size() != 1) continue;
    if (root < 0 || canonical_less(g[v], g[root])) root = v;
  }
  check_invariant(root >= 0, "tree without a leaf");
  StandardFormMatrix out;
  out.n = i.n;
  out.r = r;
  out.d.resize(r);
  out.m.resize(r);
  out.sigma.resize(r);
  std::vector<int> col_of(r + 1, -1);
  col_of[root] = 0;
  std::queue<int> bfs;
  bfs.push(root);
  int next_col = 1;
  while (!bfs.empty()) {
    int v = bfs.front();
    bfs.pop();
    std::vector<int> kids;
    for (int w : adj[v])
      if (col_of[w] < 0) kids.push_back(w);
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return canonical_less(g[a], g[b]); });
    for (int w : kids) {
      int j = next_col++;
      col_of[w] = j;
      Monomial l = lcm(g[v], g[w]);
      out.d[j - 1] = quotient_exact(l, g[w]);
      out.m[j - 1] = quotient_exact(l, g[v]);
      out.sigma[j - 1] = col_of[v];
      bfs.push(w);
    }
  }
  check_invariant(next_col == r + 1, "breadth first walk missed a generator");
  validate_standard_form(out);

  std::vector<Monomial> regen = generators_from_matrix(out);
  std::sort(regen.begin(), regen.end(), canonical_less);
  require(regen == g, "StandardFormVerificationFailed",
          "tree choice does not regenerate the minimal generators");
  return out;
}

USets u_sets(const StandardFormMatrix& m) {
  validate_standard_form(m);
  USets out;
  out.r = m.r;
  std::vector<std::vector<int>> ms(m.r);
  for (int j = 1; j <= m.r; ++j) ms[j - 1] = m_set(m, j);
  for (int j = 1; j <= m.r; ++j)
    for (int i : ms[j - 1])
      check_invariant(std::includes(ms[j - 1].begin(), ms[j - 1].end(),
                                    ms[i - 1].begin(), ms[i - 1].end()),
                      "m-sets stopped being nested along the orbit");
  for (int a = 1; a <= m.r; ++a)
    for (int b = a + 1; b <= m.r; ++b)
      if (!in_set(ms[b - 1], a)) out.u1.emplace_back(a, b);
  for (int a = 1; a <= m.r; ++a)
    for (int b = m.r + 1; b <= 2 * m.r; ++b)
      if (in_set(ms[a - 1], b - m.r)) out.u2.emplace_back(a, b);
  std::vector<std::vector<int>> pairs;
  for (auto& p : out.u1) pairs.push_back({p.first, p.second});
  for (auto& p : out.u2) pairs.push_back({p.first, p.second});
  out.all = make_prime_support(2 * m.r, 2, std::move(pairs));
  for (auto& [u, v] : out.u1)
    for (int k = 1; k <= m.r; ++k)
      check_invariant(!(in_set(ms[k - 1], u) && in_set(ms[k - 1], v)),
                      "two tied columns share an m-set");
  for (auto& [u, v] : out.u2)
    for (int k = 1; k <= m.r; ++k)
      check_invariant(!(in_set(ms[k - 1], u) && !in_set(ms[k - 1], v - m.r)),
                      "mixed pair breaks the m-set dichotomy");
  check_invariant(is_connected(out.all), "pair support of a matrix came out disconnected");
  return out;
}

MuTable mu_table(const StandardFormMatrix& m) {
  validate_standard_form(m);
  USets us = u_sets(m);
  int r = m.r;
  std::vector<std::vector<int>> ms(r);
  for (int j = 1; j <= r; ++j) ms[j - 1] = m_set(m, j);
  auto mu_of = [&](int i, int rr) {
    if (rr <= 0) return 0;
    int best = 0;
    for (int v : ms[i - 1])
      if (in_set(ms[rr - 1], v)) best = std::max(best, v);
    check_invariant(best >= 1, "m-sets never meet despite sharing column one");
    return best;
  };

  MuTable t;
  t.r = r;
  t.mu.assign(r, {});
  t.rseq.assign(r, {});
  // one pair list per column, shrinking level by level
  std::vector<std::vector<std::pair<int, int>>> live(r, us.u1);
  std::vector<int> rcur(r, r), mucur(r);
  for (int i = 1; i <= r; ++i) mucur[i - 1] = mu_of(i, r);
  bool all_zero = false;
  int level = 0;
  while (!all_zero) {
    check_invariant(level <= r + 1, "mu recursion failed to vanish in time");
    all_zero = true;
    for (int i = 0; i < r; ++i) {
      t.mu[i].push_back(mucur[i]);
      t.rseq[i].push_back(rcur[i]);
      if (mucur[i] != 0) all_zero = false;
    }
    if (all_zero) break;
    std::vector<int> rnext(r), munext(r);
    for (int i = 0; i < r; ++i) {
      std::vector<std::pair<int, int>> keep;
      for (auto& [u, v] : live[i])
        if (mucur[u - 1] == mucur[i] && mucur[v - 1] == mucur[i]) keep.emplace_back(u, v);
      live[i] = std::move(keep);
      int rr = 0;
      for (auto& [u, v] : live[i]) rr = std::max({rr, u, v});
      check_invariant(rcur[i] == 0 ? rr == 0 : rr < rcur[i],
                      "pair bound failed to decrease strictly");
      rnext[i] = rr;
      munext[i] = mu_of(i + 1, rr);
    }
    rcur = std::move(rnext);
    mucur = std::move(munext);
    ++level;
  }
  t.levels = static_cast<int>(t.mu[0].size());
  for (auto& [u, v] : us.u1) {
    bool differ = false;
    for (int h = 0; h < t.levels && !differ; ++h) differ = t.mu[u - 1][h] != t.mu[v - 1][h];
    check_invariant(differ, "tied pair kept equal mu sequences to the end");
  }
  return t;
}

std::vector<int> mu_sequence(const StandardFormMatrix& m, int i) {
  require(1 <= i && i <= m.r, "BadParameters", "column out of range");
  return mu_table(m).mu[i - 1];
}

OrientResult orient_and_sort(const StandardFormMatrix& m) {
  USets us = u_sets(m);
  MuTable mt = mu_table(m);
  int r = m.r;
  std::vector<int> mr = m_set(m, r);

  OrientResult out;
  std::vector<std::pair<int, int>> os0;
  for (auto& [a, b] : us.u1) {
    int h = 0;
    while (h < mt.levels && mt.mu[a - 1][h] == mt.mu[b - 1][h]) ++h;
    check_invariant(h < mt.levels, "orientation found no differing level");
    if (mt.mu[a - 1][h] < mt.mu[b - 1][h])
      out.omega_t.emplace_back(a, b);
    else
      out.omega_t.emplace_back(b, a);
  }
  for (auto& [a, b] : us.u2) {
    // b > r; bigger symbol first, tower part iff b-r sits in m(r)
    if (in_set(mr, b - r))
      out.omega_t.emplace_back(b, a);
    else
      os0.emplace_back(b, a);
  }
  out.omega_s0 = std::move(os0);

  // monotone columns: a point (h, i) above row r forces (h, j) for greater mu
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b) {
      if (a == b || mt.mu[a - 1][0] > mt.mu[b - 1][0]) continue;
      for (int h = r + 1; h <= 2 * r; ++h) {
        bool has_a = std::count(out.omega_t.begin(), out.omega_t.end(), std::pair<int, int>(h, a));
        bool has_b = std::count(out.omega_t.begin(), out.omega_t.end(), std::pair<int, int>(h, b));
        check_invariant(!has_a || has_b, "tower points are not monotone in mu");
      }
    }

  std::vector<std::set<int>> bar(r);
  for (auto& [a, b] : out.omega_t)
    if (b <= r) bar[b - 1].insert(a);
  for (int a = 1; a <= r; ++a)
    for (int b = a + 1; b <= r; ++b) {
      const auto& sa = bar[a - 1];
      const auto& sb = bar[b - 1];
      bool ab = std::includes(sa.begin(), sa.end(), sb.begin(), sb.end());
      bool ba = std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
      check_invariant(ab || ba, "tower slices are not pairwise comparable");
    }
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    size_t na = bar[a - 1].size(), nb = bar[b - 1].size();
    return na != nb ? na > nb : a < b;
  });
  out.tau.assign(2 * r, 0);
  for (int k = 0; k < r; ++k) out.tau[order[k] - 1] = k + 1;
  for (int k = r + 1; k <= 2 * r; ++k) out.tau[k - 1] = k;

  auto relabel = [&](const std::vector<std::pair<int, int>>& pts) {
    std::vector<Point> v;
    for (auto& [a, b] : pts) v.push_back({out.tau[a - 1], out.tau[b - 1]});
    return make_point_set(2, std::move(v));
  };
  out.d.t = relabel(out.omega_t);
  out.d.s0 = relabel(out.omega_s0);
  std::vector<Point> all = out.d.t.pts;
  all.insert(all.end(), out.d.s0.pts.begin(), out.d.s0.pts.end());
  out.d.s = make_point_set(2, std::move(all));
  GtsFail why = GtsFail::none;
  check_invariant(is_generalized_tower_set(out.d, &why),
                  std::string("sorted support is not a generalized tower set: ") +
                      gts_fail_name(why));
  return out;
}

std::pair<Family, Family> families_from_matrix(const StandardFormMatrix& m,
                                               const std::vector<int>& tau) {
  validate_standard_form(m);
  int r = m.r;
  require((int)tau.size() == 2 * r, "BadParameters", "tau must cover all symbols");
  std::vector<int> inv(2 * r, 0);
  for (int k = 1; k <= 2 * r; ++k) {
    int img = tau[k - 1];
    require(1 <= img && img <= 2 * r && inv[img - 1] == 0, "BadParameters",
            "tau is not a permutation");
    inv[img - 1] = k;
    if (k > r) require(img == k, "BadParameters", "tau must fix symbols above r");
  }
  for (int j = 1; j <= r; ++j)
    require(inv[j - 1] <= r, "BadParameters", "tau must keep columns below r");
  Family f1(2 * r), f2(r);
  for (int j = 1; j <= r; ++j) {
    f1[j - 1] = m.d[inv[j - 1] - 1];
    f2[j - 1] = m.d[inv[j - 1] - 1];
  }
  for (int j = r + 1; j <= 2 * r; ++j) f1[j - 1] = m.m[j - r - 1];

  // any two support points must cut down to at least three independent forms
  USets us = u_sets(m);
  auto entry_pair = [&](const std::pair<int, int>& p) {
    int a = p.first, b = p.second;
    Monomial first = a > r ? m.m[a - r - 1] : m.d[a - 1];
    return std::pair<Monomial, Monomial>(first, m.d[b - 1]);
  };
  std::vector<std::pair<int, int>> oriented;
  for (auto& [a, b] : us.u1) oriented.emplace_back(a, b);
  for (auto& [a, b] : us.u2) oriented.emplace_back(b, a);
  for (size_t x = 0; x < oriented.size(); ++x)
    for (size_t y = x + 1; y < oriented.size(); ++y) {
      auto [p1, p2] = entry_pair(oriented[x]);
      auto [q1, q2] = entry_pair(oriented[y]);
      MonomialIdeal four = minimize(m.n, {p1, p2, q1, q2});
      int h = height_and_equidimensional(four).first;
      require(h >= 3, "GenericityViolation",
              "forms " + mono_text(p1) + "," + mono_text(p2) + "," + mono_text(q1) + "," +
                  mono_text(q2) + " have height " + std::to_string(h));
    }
  return {f1, f2};
}

CharacterizationReport verify_characterization(const MonomialIdeal& i,
                                               const SearchOptions& opts) {
  CharacterizationReport rep;
  auto primes = minimal_primes(i);
  auto [ht, equi] = height_and_equidimensional(i);
  require(ht == 2, "NotHeightTwo", "ideal has height " + std::to_string(ht));
  rep.height = ht;
  rep.equidimensional = equi;
  rep.acm = equi && is_acm(i);
  if (rep.acm) {
    rep.matrix = standard_form_from_ideal(i);
    rep.usets = u_sets(*rep.matrix);
    rep.mu = mu_table(*rep.matrix);
    rep.orient = orient_and_sort(*rep.matrix);
    auto fams = families_from_matrix(*rep.matrix, rep.orient->tau);
    rep.f1 = fams.first;
    rep.f2 = fams.second;
    rep.rebuilt = generalized_tower_scheme_ideal(rep.orient->d, *rep.f1, *rep.f2, i.n);
    rep.verified = ideal_equal(*rep.rebuilt, i);
    check_invariant(rep.verified, "pipeline ideal differs from its source");
    rep.conclusion = "acm: ideal equals the scheme of its sorted support";
    return rep;
  }
  if (!equi) {
    rep.verified = true;
    rep.conclusion = "not acm: support mixes heights, no pair structure exists";
    return rep;
  }
  rep.support = make_prime_support(i.n, 2, primes);
  SearchOptions wide = opts;
  wide.tau_scope = 1;
  auto w = is_generalized_towerizable(*rep.support, wide);
  check_invariant(!w, "non-acm support admits a generalized tower structure");
  rep.verified = true;
  rep.conclusion = "not acm: support admits no generalized tower structure";
  return rep;
}

}  // namespace tws
