#include <algorithm>
#include <vector>

#include "doctest.h"
#include "towerset/common.hpp"
#include "towerset/monomial.hpp"
#include "towerset/random_gen.hpp"
#include "towerset/zpoly.hpp"

using namespace tws;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// every monomial with entries < base, increments in place
bool next_tuple(std::vector<int>& e, int base) {
  for (size_t i = 0; i < e.size(); ++i) {
    if (++e[i] < base) return true;
    e[i] = 0;
  }
  return false;
}

MonomialIdeal random_ideal(Rng& rng, int n, int max_gens, int max_exp) {
  std::vector<Monomial> gens;
  int count = draw(rng, 1, max_gens);
  for (int k = 0; k < count; ++k) {
    std::vector<int> e(n, 0);
    int deg = 0;
    for (int i = 0; i < n; ++i) {
      e[i] = draw(rng, 0, max_exp);
      deg += e[i];
    }
    if (deg == 0) e[draw(rng, 0, n - 1)] = 1;
    gens.push_back(mono(std::move(e)));
  }
  return minimize(n, std::move(gens));
}

}  // namespace

TEST_CASE("monomial arithmetic basics") {
  Monomial a = mono({2, 0, 1});
  Monomial b = mono({1, 3, 0});
  CHECK(a.degree() == 3);
  CHECK(lcm(a, b) == mono({2, 3, 1}));
  CHECK(gcd(a, b) == mono({1, 0, 0}));
  CHECK(product(a, b) == mono({3, 3, 1}));
  CHECK(quotient_exact(lcm(a, b), a) == mono({0, 3, 0}));
  CHECK(gcd(a, b).divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(mono({0, 1, 0}).coprime(mono({1, 0, 1})));
  CHECK_FALSE(a.coprime(b));
  CHECK(Monomial::variable(3, 2) == mono({0, 1, 0}));
  CHECK(Monomial::from_support(4, {1, 3}) == mono({1, 0, 1, 0}));
  CHECK(mono({1, 0, 1, 0}).support() == std::vector<int>{1, 3});
  CHECK(mono({1, 1, 0}).is_squarefree());
  CHECK_FALSE(mono({2, 1, 0}).is_squarefree());
}

TEST_CASE("minimize drops dominated generators") {
  MonomialIdeal i = minimize(3, {mono({1, 0, 0}), mono({1, 1, 0}), mono({0, 1, 1})});
  REQUIRE(i.gens.size() == 2);
  CHECK(i.contains(mono({1, 1, 0})));
  CHECK(i.contains(mono({0, 1, 1})));
  CHECK_FALSE(i.contains(mono({0, 1, 0})));
  CHECK_FALSE(i.contains(Monomial::one(3)));
}

TEST_CASE("pairwise prime intersection has the expected generators") {
  // (x1,x3) meet (x2,x3) meet (x1,x4)
  MonomialIdeal i = ideal_from_support(make_prime_support(4, 2, {{1, 3}, {2, 3}, {1, 4}}));
  MonomialIdeal want =
      minimize(4, {mono({1, 1, 0, 0}), mono({1, 0, 1, 0}), mono({0, 0, 1, 1})});
  CHECK(ideal_equal(i, want));
}

TEST_CASE("intersection and colon agree with the membership oracle") {
  Rng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    int n = draw(rng, 2, 4);
    MonomialIdeal a = random_ideal(rng, n, 4, 2);
    MonomialIdeal b = random_ideal(rng, n, 4, 2);
    MonomialIdeal both = intersect(a, b);
    Monomial f = random_ideal(rng, n, 1, 2).gens.front();
    MonomialIdeal quo = colon_monomial(a, f);
    std::vector<int> e(n, 0);
    do {
      Monomial m = mono(e);
      CHECK(both.contains(m) == (a.contains(m) && b.contains(m)));
      CHECK(quo.contains(m) == a.contains(product(m, f)));
    } while (next_tuple(e, 4));
  }
}

TEST_CASE("support ideal colon equals the ideal of the colon support") {
  PrimeSupport u = make_prime_support(6, 2, {{1, 2}, {3, 4}, {5, 6}, {4, 6}, {1, 4}, {1, 6}});
  MonomialIdeal i = ideal_from_support(u);
  for (int a = 1; a <= 6; ++a) {
    PrimeSupport ua = colon_support(u, a);
    if (ua.primes.empty()) continue;
    CHECK(ideal_equal(colon_monomial(i, Monomial::variable(6, a)), ideal_from_support(ua)));
  }
}

TEST_CASE("minimal primes of six pairwise supports") {
  MonomialIdeal i = minimize(
      6, {mono({0, 1, 0, 1, 0, 1}), mono({1, 0, 0, 1, 0, 1}), mono({1, 0, 1, 0, 0, 1}),
          mono({1, 0, 0, 1, 1, 0})});
  auto primes = minimal_primes(i);
  std::vector<std::vector<int>> want = {{1, 2}, {1, 4}, {1, 6}, {3, 4}, {4, 6}, {5, 6}};
  CHECK(primes == want);
  auto he = height_and_equidimensional(i);
  CHECK(he.first == 2);
  CHECK(he.second);
}

TEST_CASE("height detects mixed dimensions") {
  // (x3) meet (x1,x2)
  MonomialIdeal i = minimize(3, {mono({1, 0, 1}), mono({0, 1, 1})});
  auto he = height_and_equidimensional(i);
  CHECK(he.first == 1);
  CHECK_FALSE(he.second);
  CHECK(minimal_primes(i) == std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("hilbert numerator of a principal ideal") {
  MonomialIdeal i = minimize(1, {mono({1})});
  CHECK(hilbert_numerator(i) == ZPoly({1, -1}));
  MonomialIdeal j = minimize(2, {mono({1, 1})});
  CHECK(hilbert_numerator(j) == ZPoly({1, 0, -1}));
}

TEST_CASE("numerator series matches the counted hilbert function") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = draw(rng, 2, 5);
    MonomialIdeal i = random_ideal(rng, n, 5, 2);
    auto series = series_coefficients(hilbert_numerator(i), n, 8);
    auto counted = brute_hilbert_function(i, 8);
    CHECK(series == counted);
  }
}

TEST_CASE("h vector of a hypersurface") {
  MonomialIdeal i = minimize(2, {mono({1, 1})});
  auto hd = h_vector_and_degree(i, 1);
  CHECK(hd.first == std::vector<long long>{1, 1});
  CHECK(hd.second == 2);
}

TEST_CASE("counted hilbert function of one squarefree quadric") {
  MonomialIdeal i = minimize(2, {mono({1, 1})});
  CHECK(brute_hilbert_function(i, 3) == std::vector<long long>{1, 2, 2, 2});
}

TEST_CASE("non divisible h vector request is rejected") {
  // (x1x3, x2x3) has height one but its quotient is not Cohen-Macaulay in codim 2
  MonomialIdeal i = minimize(3, {mono({1, 0, 1}), mono({0, 1, 1})});
  CHECK_THROWS_AS((void)h_vector_and_degree(i, 2), input_error);
}

TEST_CASE("canonical order sorts by degree then exponents") {
  std::vector<Monomial> v = {mono({1, 1, 0}), mono({1, 0, 0}), mono({0, 0, 1}),
                             mono({0, 1, 1})};
  std::sort(v.begin(), v.end(), canonical_less);
  CHECK(v[0] == mono({0, 0, 1}));
  CHECK(v[1] == mono({1, 0, 0}));
  CHECK(v[2] == mono({0, 1, 1}));
  CHECK(v[3] == mono({1, 1, 0}));
}
