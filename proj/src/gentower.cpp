#include "towerset/gentower.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "towerset/common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tws {

PrimeSupport forgetful(const PointSet& s, int n) {
  require(s.c == 2, "BadParameters", "forgetful map needs planar points");
  require(s.is_starred(), "BadParameters", "points must have distinct coordinates");
  int top = n;
  std::vector<std::vector<int>> primes;
  for (const Point& p : s.pts) {
    primes.push_back({std::min(p[0], p[1]), std::max(p[0], p[1])});
    top = std::max(top, std::max(p[0], p[1]));
  }
  return make_prime_support(top, 2, std::move(primes));
}

PointSet colon_points(const PointSet& s, int h) {
  PointSet out;
  out.c = s.c;
  for (const Point& p : s.pts)
    if (std::find(p.begin(), p.end(), h) == p.end()) out.pts.push_back(p);
  return out;
}

PrimeSupport colon_support(const PrimeSupport& u, int h) {
  PrimeSupport out;
  out.n = u.n;
  out.c = u.c;
  for (const auto& p : u.primes)
    if (std::find(p.begin(), p.end(), h) == p.end()) out.primes.push_back(p);
  return out;
}

namespace {

std::map<int, std::set<int>> columns_of(const PointSet& t) {
  std::map<int, std::set<int>> cols;
  for (const Point& p : t.pts) cols[p[1]].insert(p[0]);
  return cols;
}

}  // namespace

std::vector<int> f_boundary(const PointSet& t, int h) {
  require(t.c == 2, "BadParameters", "boundary needs planar points");
  require(is_tower_set(t), "NotTowerSet", "boundary needs a tower set");
  auto cols = columns_of(t);
  require(cols.count(h), "BadColumn", "symbol is not a column of the tower");
  const std::set<int>& th = cols[h];
  std::vector<int> out;
  for (auto& [j, tj] : cols) {
    if (j == h) continue;
    bool strict = tj.size() > th.size() &&
                  std::includes(tj.begin(), tj.end(), th.begin(), th.end());
    if (strict && !t.contains({h, j})) out.push_back(j);
  }
  for (int j : out) check_invariant(j < h, "boundary member not below the column");
  return out;
}

bool is_connected(const PrimeSupport& u) {
  auto meets = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (int x : a)
      if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    return false;
  };
  for (const auto& a : u.primes)
    for (const auto& b : u.primes) {
      bool linked = false;
      for (const auto& c : u.primes)
        if (meets(a, c) && meets(b, c)) {
          linked = true;
          break;
        }
      if (!linked) return false;
    }
  return true;
}

bool is_connected(const PointSet& s) { return is_connected(forgetful(s)); }

const char* gts_fail_name(GtsFail f) {
  switch (f) {
    case GtsFail::none: return "none";
    case GtsFail::not_starred: return "not_starred";
    case GtsFail::not_partition: return "not_partition";
    case GtsFail::empty_tower: return "empty_tower";
    case GtsFail::not_tower: return "not_tower";
    case GtsFail::disconnected: return "disconnected";
    case GtsFail::s0_first_symbol_reused: return "s0_first_symbol_reused";
    case GtsFail::s0_column_outside: return "s0_column_outside";
    case GtsFail::f_closure_broken: return "f_closure_broken";
  }
  return "unknown";
}

bool is_generalized_tower_set(const GTSDecomposition& d, GtsFail* why) {
  auto fail = [&](GtsFail f) {
    if (why) *why = f;
    return false;
  };
  if (why) *why = GtsFail::none;
  if (d.s.c != 2 || d.t.c != 2 || d.s0.c != 2) return fail(GtsFail::not_partition);
  if (!d.s.is_starred()) return fail(GtsFail::not_starred);
  std::vector<Point> merged = d.t.pts;
  merged.insert(merged.end(), d.s0.pts.begin(), d.s0.pts.end());
  std::sort(merged.begin(), merged.end());
  if (std::adjacent_find(merged.begin(), merged.end()) != merged.end())
    return fail(GtsFail::not_partition);
  if (merged != d.s.pts) return fail(GtsFail::not_partition);
  if (d.t.empty()) return fail(GtsFail::empty_tower);
  if (!is_tower_set(d.t)) return fail(GtsFail::not_tower);
  if (!is_connected(d.s)) return fail(GtsFail::disconnected);
  auto pi1 = projection(d.t, 1);
  auto pi2 = projection(d.t, 2);
  auto in = [](const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
  };
  for (const Point& p : d.s0.pts) {
    if (in(pi1, p[0]) || in(pi2, p[0])) return fail(GtsFail::s0_first_symbol_reused);
    if (!in(pi1, p[1]) || !in(pi2, p[1])) return fail(GtsFail::s0_column_outside);
  }
  for (const Point& p : d.s0.pts)
    for (int h : f_boundary(d.t, p[1]))
      if (!d.s0.contains({p[0], h})) return fail(GtsFail::f_closure_broken);
  return true;
}

std::optional<GTSDecomposition> find_gts_decomposition(const PointSet& s, int cap) {
  require(s.c == 2, "BadParameters", "decomposition needs planar points");
  require((int)s.pts.size() <= cap, "SizeCapExceeded",
          "point set larger than the decomposition cap");
  if (s.empty() || !s.is_starred()) return std::nullopt;
  auto pi2 = projection(s, 2);
  // a valid residual part is a union of whole first-symbol groups whose
  // symbol never occurs as a column
  std::map<int, std::vector<Point>> groups;
  for (const Point& p : s.pts) groups[p[0]].push_back(p);
  std::vector<int> eligible;
  for (auto& [sym, pts] : groups)
    if (!std::binary_search(pi2.begin(), pi2.end(), sym)) eligible.push_back(sym);
  std::optional<GTSDecomposition> best;
  int k = static_cast<int>(eligible.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::set<int> chosen;
    for (int b = 0; b < k; ++b)
      if (mask & (1u << b)) chosen.insert(eligible[b]);
    std::vector<Point> tpts, s0pts;
    for (const Point& p : s.pts)
      (chosen.count(p[0]) ? s0pts : tpts).push_back(p);
    GTSDecomposition d;
    d.s = s;
    d.t = make_point_set(2, std::move(tpts));
    d.s0 = make_point_set(2, std::move(s0pts));
    if (!is_generalized_tower_set(d)) continue;
    if (!best || d.t.pts < best->t.pts) best = std::move(d);
  }
  return best;
}

namespace {

struct Oriented {
  std::vector<Point> pts;                               // oriented pairs, input order
  std::vector<std::pair<std::vector<int>, Point>> omega;
};

Oriented orient(const std::vector<std::vector<int>>& pairs, std::uint32_t mask) {
  Oriented o;
  for (size_t k = 0; k < pairs.size(); ++k) {
    int a = pairs[k][0], b = pairs[k][1];
    Point p = (mask & (1u << k)) ? Point{b, a} : Point{a, b};
    o.pts.push_back(p);
    o.omega.push_back({pairs[k], p});
  }
  return o;
}

std::vector<int> occurring_symbols(const std::vector<std::vector<int>>& pairs) {
  std::set<int> occ;
  for (const auto& p : pairs) occ.insert(p.begin(), p.end());
  return {occ.begin(), occ.end()};
}

void validate_support(const PrimeSupport& u, const SearchOptions& opts) {
  require(u.c == 2, "BadParameters", "search needs a planar support");
  for (const auto& p : u.primes)
    require(p.size() == 2, "BadParameters", "support member is not a pair");
  auto occ = occurring_symbols(u.primes);
  require((int)occ.size() <= opts.max_symbols, "SizeCapExceeded",
          "too many symbols for the search");
  require((int)u.primes.size() <= opts.max_pairs, "SizeCapExceeded",
          "too many pairs for the search");
}

// tower condition after relabeling depends only on slice comparability
bool slices_form_chain(const std::vector<Point>& pts,
                       std::map<int, std::set<int>>& cols) {
  cols.clear();
  for (const Point& p : pts) cols[p[1]].insert(p[0]);
  for (auto& [a, sa] : cols)
    for (auto& [b, sb] : cols) {
      if (a >= b) continue;
      if (!std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) &&
          !std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
        return false;
    }
  return true;
}

// least image tuple over the domain symbols making the points a tower
std::optional<std::vector<int>> least_tower_tau(const std::vector<int>& occ,
                                                const std::map<int, std::set<int>>& cols) {
  int k = static_cast<int>(occ.size());
  std::vector<int> image(k, 0);
  std::vector<char> used(k + 1, 0);
  std::map<int, int> assigned;  // symbol -> image, for columns only
  auto consistent = [&](int sym, int img) {
    auto it = cols.find(sym);
    if (it == cols.end()) return true;
    for (auto& [other, img2] : assigned) {
      const std::set<int>& a = it->second;
      const std::set<int>& b = cols.at(other);
      if (a == b) continue;
      bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
      // the larger slice must come first
      if (a_in_b && img < img2) return false;
      if (!a_in_b && img > img2) return false;
    }
    return true;
  };
  std::function<bool(int)> rec = [&](int pos) {
    if (pos == k) return true;
    int sym = occ[pos];
    bool is_col = cols.count(sym) != 0;
    for (int img = 1; img <= k; ++img) {
      if (used[img]) continue;
      if (is_col && !consistent(sym, img)) continue;
      used[img] = 1;
      image[pos] = img;
      if (is_col) assigned[sym] = img;
      if (rec(pos + 1)) return true;
      if (is_col) assigned.erase(sym);
      used[img] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return image;
}

// the permutation domain under the requested scope
std::vector<int> tau_domain(const std::vector<int>& occ, const Oriented& o, int scope) {
  if (scope != 2) return occ;
  std::set<int> pi2;
  for (const Point& p : o.pts) pi2.insert(p[1]);
  return {pi2.begin(), pi2.end()};
}

TowerizeWitness make_witness(const std::vector<int>& domain, const std::vector<int>& image,
                             const Oriented& o) {
  TowerizeWitness w;
  std::map<int, int> tau;
  for (size_t i = 0; i < domain.size(); ++i) {
    tau[domain[i]] = domain[image[i] - 1];
    w.tau.emplace_back(domain[i], domain[image[i] - 1]);
  }
  w.omega = o.omega;
  std::vector<Point> relabeled;
  for (const Point& p : o.pts) {
    int a = tau.count(p[0]) ? tau[p[0]] : p[0];
    int b = tau.count(p[1]) ? tau[p[1]] : p[1];
    relabeled.push_back({a, b});
  }
  w.image = make_point_set(2, std::move(relabeled));
  return w;
}

}  // namespace

std::optional<TowerizeWitness> is_towerizable(const PrimeSupport& u, const SearchOptions& opts) {
  validate_support(u, opts);
  std::vector<std::vector<int>> pairs = u.primes;
  auto occ = occurring_symbols(pairs);
  if (pairs.empty()) return TowerizeWitness{{}, {}, PointSet{2, {}}};
  int np = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    Oriented o = orient(pairs, mask);
    std::map<int, std::set<int>> cols;
    if (!slices_form_chain(o.pts, cols)) continue;
    auto domain = tau_domain(occ, o, opts.tau_scope);
    auto image = least_tower_tau(domain, cols);
    if (!image) continue;
    TowerizeWitness w = make_witness(domain, *image, o);
    check_invariant(is_tower_set(w.image), "relabeled image is not a tower set");
    return w;
  }
  return std::nullopt;
}

std::optional<TowerizeWitness> is_towerizable_brute(const PrimeSupport& u,
                                                    const SearchOptions& opts) {
  validate_support(u, opts);
  std::vector<std::vector<int>> pairs = u.primes;
  auto occ = occurring_symbols(pairs);
  if (pairs.empty()) return TowerizeWitness{{}, {}, PointSet{2, {}}};
  int np = static_cast<int>(pairs.size());
  for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
    Oriented o = orient(pairs, mask);
    auto domain = tau_domain(occ, o, opts.tau_scope);
    int k = static_cast<int>(domain.size());
    std::vector<int> image(k);
    for (int i = 0; i < k; ++i) image[i] = i + 1;
    do {
      TowerizeWitness w = make_witness(domain, image, o);
      if (is_tower_set(w.image)) return w;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return std::nullopt;
}

namespace {

// candidate under one orientation and one permutation of the tau domain
std::optional<GenTowerizeWitness> gen_candidate(const Oriented& o,
                                                const std::vector<int>& domain,
                                                const std::vector<int>& image, int cap) {
  TowerizeWitness base = make_witness(domain, image, o);
  auto d = find_gts_decomposition(base.image, cap);
  if (!d) return std::nullopt;
  GenTowerizeWitness w;
  w.w = std::move(base);
  w.decomp = *d;
  return w;
}

}  // namespace

std::optional<GenTowerizeWitness> is_generalized_towerizable(const PrimeSupport& u,
                                                             const SearchOptions& opts) {
  validate_support(u, opts);
  std::vector<std::vector<int>> pairs = u.primes;
  if (pairs.empty()) return std::nullopt;
  if (!is_connected(u)) return std::nullopt;
  auto occ = occurring_symbols(pairs);
  int np = static_cast<int>(pairs.size());
  std::uint32_t total = 1u << np;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    Oriented o = orient(pairs, mask);
    std::vector<int> domain;
    if (opts.tau_scope == 1) {
      domain = occ;
    } else {
      std::set<int> pi2;
      for (const Point& p : o.pts) pi2.insert(p[1]);
      domain.assign(pi2.begin(), pi2.end());
    }
    int k = static_cast<int>(domain.size());
    std::vector<int> image(k);
    for (int i = 0; i < k; ++i) image[i] = i + 1;
    do {
      auto w = gen_candidate(o, domain, image, opts.decomposition_cap);
      if (w) return w;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return std::nullopt;
}

MonomialIdeal support_ideal(const PointSet& s, int n) {
  return ideal_from_support(forgetful(s, n));
}

MonomialIdeal generalized_tower_scheme_ideal(const GTSDecomposition& d, const Family& f1,
                                             const Family& f2, int n) {
  GtsFail why = GtsFail::none;
  require(is_generalized_tower_set(d, &why), "NotGTS",
          std::string("decomposition rejected: ") + gts_fail_name(why));
  auto member = [&](const Family& f, int j, int which) -> const Monomial& {
    require((int)f.size() >= j, "BadParameters",
            "family " + std::to_string(which) + " misses index " + std::to_string(j));
    const Monomial& m = f[j - 1];
    require(m.n() == n, "MixedAmbient", "family member in a different ring");
    require(!m.is_one(), "BadParameters", "family member of degree zero");
    return m;
  };
  for (const Point& p : d.s.pts)
    require(member(f1, p[0], 1).coprime(member(f2, p[1], 2)), "GenericityViolation",
            "family members at a support point share a variable");
  for (size_t a = 0; a < d.s.pts.size(); ++a)
    for (size_t b = a + 1; b < d.s.pts.size(); ++b) {
      const Point& p = d.s.pts[a];
      const Point& q = d.s.pts[b];
      MonomialIdeal four = minimize(
          n, {f1[p[0] - 1], f2[p[1] - 1], f1[q[0] - 1], f2[q[1] - 1]});
      int h = height_and_equidimensional(four).first;
      require(h >= 3, "GenericityViolation",
              "two support points fail the height condition");
    }
  std::vector<MonomialIdeal> parts;
  for (const Point& p : d.s.pts)
    parts.push_back(minimize(n, {f1[p[0] - 1], f2[p[1] - 1]}));
  return intersect_all(n, parts);
}

}  // namespace tws
