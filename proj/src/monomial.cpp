#include "towerset/monomial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "towerset/common.hpp"

namespace tws {

Monomial Monomial::variable(int n, int i) {
  require(i >= 1 && i <= n, "BadParameters", "variable index out of range");
  Monomial m = one(n);
  m.e[i - 1] = 1;
  return m;
}

Monomial Monomial::from_support(int n, const std::vector<int>& s) {
  Monomial m = one(n);
  for (int v : s) {
    require(v >= 1 && v <= n, "BadParameters", "support index out of range");
    require(m.e[v - 1] == 0, "BadParameters", "repeated index in support");
    m.e[v - 1] = 1;
  }
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

bool Monomial::is_squarefree() const {
  for (int x : e)
    if (x > 1) return false;
  return true;
}

std::uint64_t Monomial::support_mask() const {
  require(n() <= 64, "BadParameters", "support mask needs n <= 64");
  std::uint64_t m = 0;
  for (int i = 0; i < n(); ++i)
    if (e[i] > 0) m |= (1ull << i);
  return m;
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < n(); ++i)
    if (e[i] > 0) s.push_back(i + 1);
  return s;
}

bool Monomial::divides(const Monomial& m) const {
  for (int i = 0; i < n(); ++i)
    if (e[i] > m.e[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& m) const {
  for (int i = 0; i < n(); ++i)
    if (e[i] > 0 && m.e[i] > 0) return false;
  return true;
}

static void check_same_ambient(const Monomial& a, const Monomial& b) {
  require(a.n() == b.n(), "MixedAmbient", "monomials live in different rings");
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  Monomial m = a;
  for (int i = 0; i < m.n(); ++i) m.e[i] = std::max(m.e[i], b.e[i]);
  return m;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  Monomial m = a;
  for (int i = 0; i < m.n(); ++i) m.e[i] = std::min(m.e[i], b.e[i]);
  return m;
}

Monomial product(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  Monomial m = a;
  for (int i = 0; i < m.n(); ++i) m.e[i] += b.e[i];
  return m;
}

Monomial quotient_exact(const Monomial& a, const Monomial& b) {
  check_same_ambient(a, b);
  require(b.divides(a), "BadParameters", "inexact monomial quotient");
  Monomial m = a;
  for (int i = 0; i < m.n(); ++i) m.e[i] -= b.e[i];
  return m;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal minimize(int n, std::vector<Monomial> gens) {
  for (const Monomial& g : gens)
    require(g.n() == n, "MixedAmbient", "generator in a different ring");
  std::sort(gens.begin(), gens.end(), canonical_less);
  MonomialIdeal out;
  out.n = n;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out.gens)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.gens.push_back(g);
  }
  return out;
}

bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.n == b.n && a.gens == b.gens;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.n == b.n, "MixedAmbient", "ideals live in different rings");
  if (a.is_zero() || b.is_zero()) return MonomialIdeal{a.n, {}};
  std::vector<Monomial> gens;
  gens.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& g : a.gens)
    for (const Monomial& h : b.gens) gens.push_back(lcm(g, h));
  return minimize(a.n, std::move(gens));
}

MonomialIdeal intersect_all(int n, const std::vector<MonomialIdeal>& parts) {
  require(!parts.empty(), "EmptySupport", "intersection of an empty list");
  MonomialIdeal acc = parts[0];
  require(acc.n == n, "MixedAmbient", "ideal in a different ring");
  for (size_t i = 1; i < parts.size(); ++i) acc = intersect(acc, parts[i]);
  return acc;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require(a.n == b.n, "MixedAmbient", "ideals live in different rings");
  std::vector<Monomial> gens = a.gens;
  gens.insert(gens.end(), b.gens.begin(), b.gens.end());
  return minimize(a.n, std::move(gens));
}

MonomialIdeal colon_monomial(const MonomialIdeal& i, const Monomial& m) {
  require(i.n == m.n(), "MixedAmbient", "monomial in a different ring");
  std::vector<Monomial> gens;
  gens.reserve(i.gens.size());
  for (const Monomial& g : i.gens) gens.push_back(quotient_exact(g, gcd(g, m)));
  return minimize(i.n, std::move(gens));
}

PrimeSupport make_prime_support(int n, int c, std::vector<std::vector<int>> primes) {
  for (auto& p : primes) {
    std::sort(p.begin(), p.end());
    require(std::adjacent_find(p.begin(), p.end()) == p.end(), "BadParameters",
            "repeated variable in a prime");
    require(!p.empty(), "BadParameters", "empty prime");
    require(p.front() >= 1 && p.back() <= n, "BadParameters", "variable out of range");
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return PrimeSupport{n, c, std::move(primes)};
}

MonomialIdeal ideal_from_support(const PrimeSupport& s) {
  require(!s.primes.empty(), "EmptySupport", "no primes in the support");
  std::vector<MonomialIdeal> parts;
  parts.reserve(s.primes.size());
  for (const auto& p : s.primes) {
    std::vector<Monomial> vars;
    for (int v : p) vars.push_back(Monomial::variable(s.n, v));
    parts.push_back(minimize(s.n, std::move(vars)));
  }
  return intersect_all(s.n, parts);
}

namespace {

void transversal_rec(const std::vector<std::uint64_t>& supports, std::uint64_t cover,
                     std::set<std::uint64_t>& out) {
  for (std::uint64_t s : supports) {
    if ((s & cover) != 0) continue;
    // branch on every variable of the first uncovered generator
    std::uint64_t rest = s;
    while (rest) {
      std::uint64_t bit = rest & (~rest + 1);
      rest ^= bit;
      transversal_rec(supports, cover | bit, out);
    }
    return;
  }
  out.insert(cover);
}

}  // namespace

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& i) {
  require(!i.is_zero(), "BadParameters", "zero ideal has no minimal primes over it");
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : i.gens) {
    require(g.is_squarefree(), "NotSquarefree", "generator is not squarefree");
    require(!g.is_one(), "BadParameters", "unit ideal");
    supports.push_back(g.support_mask());
  }
  std::set<std::uint64_t> covers;
  transversal_rec(supports, 0, covers);
  // keep the inclusion-minimal covers only
  std::vector<std::uint64_t> keep;
  for (std::uint64_t c : covers) {
    bool minimal = true;
    for (std::uint64_t d : covers)
      if (d != c && (d & ~c) == 0) {
        minimal = false;
        break;
      }
    if (minimal) keep.push_back(c);
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t c : keep) {
    std::vector<int> p;
    for (int v = 0; v < i.n; ++v)
      if (c & (1ull << v)) p.push_back(v + 1);
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<int, bool> height_and_equidimensional(const MonomialIdeal& i) {
  auto primes = minimal_primes(i);
  size_t hmin = primes[0].size(), hmax = primes[0].size();
  for (const auto& p : primes) {
    hmin = std::min(hmin, p.size());
    hmax = std::max(hmax, p.size());
  }
  return {static_cast<int>(hmin), hmin == hmax};
}

namespace {

ZPoly numerator_rec(int n, const MonomialIdeal& i) {
  if (i.is_zero()) return ZPoly::one();
  // pick the variable dividing the most generators
  std::vector<int> freq(n, 0);
  for (const Monomial& g : i.gens)
    for (int v = 0; v < n; ++v)
      if (g.e[v] > 0) freq[v]++;
  int best = 0;
  for (int v = 1; v < n; ++v)
    if (freq[v] > freq[best]) best = v;
  if (freq[best] <= 1) {
    // pairwise coprime generators
    ZPoly p = ZPoly::one();
    for (const Monomial& g : i.gens) p = p * ZPoly::one_minus_t_power(g.degree());
    return p;
  }
  Monomial x = Monomial::variable(n, best + 1);
  MonomialIdeal plus = ideal_sum(i, MonomialIdeal{n, {x}});
  MonomialIdeal col = colon_monomial(i, x);
  return numerator_rec(n, plus) + ZPoly::t_power(1) * numerator_rec(n, col);
}

}  // namespace

ZPoly hilbert_numerator(const MonomialIdeal& i) {
  for (const Monomial& g : i.gens)
    require(!g.is_one(), "BadParameters", "unit ideal");
  return numerator_rec(i.n, i);
}

std::pair<std::vector<long long>, long long> h_vector_and_degree(const MonomialIdeal& i, int c) {
  require(c >= 0, "BadParameters", "negative codimension");
  ZPoly k = hilbert_numerator(i);
  for (int step = 0; step < c; ++step) {
    ZPoly q;
    require(divide_by_one_minus_t(k, q), "NotDivisible",
            "numerator is not divisible by the expected power of 1-t");
    k = q;
  }
  long long deg = k.eval_one();
  require(deg != 0, "NotDivisible", "codimension mismatch");
  std::vector<long long> h = k.c;
  if (h.empty()) h.push_back(0);
  return {h, deg};
}

namespace {

void count_rec(const MonomialIdeal& i, int var, int used, int dmax,
               std::vector<char>& alive, std::vector<long long>& counts,
               std::vector<int>& expo) {
  // prune once some still-alive generator is fully accounted for
  for (size_t g = 0; g < i.gens.size(); ++g) {
    if (!alive[g]) continue;
    bool done = true;
    for (int v = var; v < i.n; ++v)
      if (i.gens[g].e[v] > 0) {
        done = false;
        break;
      }
    if (done) return;
  }
  if (var == i.n) {
    counts[used]++;
    return;
  }
  std::vector<char> saved = alive;
  for (int ev = 0; used + ev <= dmax; ++ev) {
    expo[var] = ev;
    for (size_t g = 0; g < i.gens.size(); ++g)
      alive[g] = saved[g] && (i.gens[g].e[var] <= ev);
    count_rec(i, var + 1, used + ev, dmax, alive, counts, expo);
  }
  expo[var] = 0;
  alive = saved;
}

}  // namespace

std::vector<long long> brute_hilbert_function(const MonomialIdeal& i, int dmax) {
  require(dmax >= 0, "BadParameters", "negative degree bound");
  std::vector<long long> counts(dmax + 1, 0);
  std::vector<char> alive(i.gens.size(), 1);
  std::vector<int> expo(i.n, 0);
  count_rec(i, 0, 0, dmax, alive, counts, expo);
  return counts;
}

}  // namespace tws
