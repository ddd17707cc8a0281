#include <string>
#include <vector>

#include "doctest.h"
#include "towerset/common.hpp"
#include "towerset/gentower.hpp"
#include "towerset/monomial.hpp"
#include "towerset/pointset.hpp"
#include "towerset/random_gen.hpp"

using namespace tws;

namespace {

PointSet pts(int c, std::vector<Point> p) { return make_point_set(c, std::move(p)); }

GTSDecomposition decomp(std::vector<Point> t, std::vector<Point> s0) {
  GTSDecomposition d;
  d.t = pts(2, std::move(t));
  d.s0 = pts(2, std::move(s0));
  std::vector<Point> all = d.t.pts;
  all.insert(all.end(), d.s0.pts.begin(), d.s0.pts.end());
  d.s = pts(2, std::move(all));
  return d;
}

GTSDecomposition worked_decomposition() {
  return decomp({{3, 1}, {4, 1}, {4, 2}, {4, 3}, {6, 1}}, {{5, 3}});
}

GtsFail why_of(const GTSDecomposition& d) {
  GtsFail why = GtsFail::none;
  (void)is_generalized_tower_set(d, &why);
  return why;
}

}  // namespace

TEST_CASE("colon drops every support touching the symbol") {
  PointSet s = worked_decomposition().s;
  CHECK(colon_points(s, 1).pts == pts(2, {{4, 2}, {4, 3}, {5, 3}}).pts);
  CHECK(colon_points(s, 9).pts == s.pts);
  PrimeSupport u = make_prime_support(6, 2, {{1, 2}, {3, 4}, {5, 6}, {4, 6}, {1, 4}, {1, 6}});
  PrimeSupport q = colon_support(u, 4);
  CHECK(q.primes == std::vector<std::vector<int>>{{1, 2}, {1, 6}, {5, 6}});
}

TEST_CASE("boundary columns of a small tower") {
  PointSet t = pts(2, {{2, 1}, {4, 1}, {4, 3}});
  CHECK(f_boundary(t, 3) == std::vector<int>{1});
  CHECK(f_boundary(t, 1).empty());
  CHECK_THROWS_AS((void)f_boundary(t, 7), input_error);
}

TEST_CASE("connectivity of supports") {
  CHECK(is_connected(worked_decomposition().s));
  CHECK(is_connected(pts(2, {{1, 2}})));
  CHECK_FALSE(is_connected(pts(2, {{1, 2}, {3, 4}})));
}

TEST_CASE("the six point decomposition is accepted") {
  GTSDecomposition d = worked_decomposition();
  CHECK(is_generalized_tower_set(d));
  CHECK(why_of(d) == GtsFail::none);
}

TEST_CASE("each rejection reason is reachable") {
  CHECK(why_of(decomp({{2, 2}}, {})) == GtsFail::not_starred);
  GTSDecomposition twice = decomp({{2, 1}}, {});
  twice.s0 = pts(2, {{2, 1}});
  CHECK(why_of(twice) == GtsFail::not_partition);
  GTSDecomposition hollow = decomp({{2, 1}}, {});
  hollow.t.pts.clear();
  hollow.s0 = pts(2, {{2, 1}});
  CHECK(why_of(hollow) == GtsFail::empty_tower);
  CHECK(why_of(decomp({{1, 2}, {2, 1}}, {})) == GtsFail::not_tower);
  CHECK(why_of(decomp({{2, 1}}, {{4, 3}})) == GtsFail::disconnected);
  CHECK(why_of(decomp({{2, 1}, {3, 1}}, {{3, 5}})) == GtsFail::s0_first_symbol_reused);
  CHECK(why_of(decomp({{2, 1}, {3, 1}}, {{5, 3}})) == GtsFail::s0_column_outside);
  CHECK(std::string(gts_fail_name(GtsFail::f_closure_broken)) == "f_closure_broken");
}

TEST_CASE("residual points must close under the boundary") {
  // boundary cascade: column 4 points need column 3 partners, column 3 needs 2
  std::vector<Point> tower = {{2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {4, 2},
                              {5, 2}, {6, 2}, {5, 3}, {6, 3}, {6, 4}};
  GTSDecomposition broken =
      decomp(tower, {{8, 2}, {8, 3}, {8, 4}, {9, 3}, {9, 4}});
  CHECK(f_boundary(broken.t, 3) == std::vector<int>{2});
  CHECK(f_boundary(broken.t, 4) == std::vector<int>{3});
  // row 9 misses its column 2 partner
  CHECK(why_of(broken) == GtsFail::f_closure_broken);
  GTSDecomposition closed =
      decomp(tower, {{8, 2}, {8, 3}, {8, 4}, {9, 2}, {9, 3}, {9, 4}});
  CHECK(is_generalized_tower_set(closed));
}

TEST_CASE("colon by a shared symbol keeps the structure") {
  // the hypothesis needs symbols lying in both projections of the tower:
  // 2 only appears as a column here and its colon breaks the residual part
  GTSDecomposition d = decomp({{1, 2}, {1, 5}, {3, 2}, {3, 5}, {5, 2}}, {{8, 5}, {9, 5}});
  REQUIRE(is_generalized_tower_set(d));
  GTSDecomposition bad;
  bad.s = colon_points(d.s, 2);
  bad.t = colon_points(d.t, 2);
  bad.s0 = colon_points(d.s0, 2);
  CHECK(why_of(bad) == GtsFail::s0_column_outside);
  GTSDecomposition good;
  good.s = colon_points(d.s, 5);
  good.t = colon_points(d.t, 5);
  good.s0 = colon_points(d.s0, 5);
  CHECK(is_generalized_tower_set(good));
  CHECK(good.s0.empty());
}

TEST_CASE("search recovers the six point decomposition") {
  GTSDecomposition d = worked_decomposition();
  auto found = find_gts_decomposition(d.s);
  REQUIRE(found.has_value());
  CHECK(found->t.pts == d.t.pts);
  CHECK(found->s0.pts == d.s0.pts);
}

TEST_CASE("random generalized tower sets satisfy the checker") {
  Rng rng(21);
  for (int k = 0; k < 40; ++k) {
    GTSDecomposition d = random_generalized_tower_set(rng, 7, 12);
    CHECK(is_generalized_tower_set(d));
    if ((int)d.s.pts.size() <= 14) CHECK(find_gts_decomposition(d.s).has_value());
  }
}

TEST_CASE("a path of two supports is towerizable") {
  PrimeSupport u = make_prime_support(3, 2, {{1, 2}, {2, 3}});
  auto w = is_towerizable(u);
  REQUIRE(w.has_value());
  CHECK(w->image.pts.size() == 2);
  CHECK(is_tower_set(w->image));
  CHECK(is_towerizable_brute(u).has_value());
  PrimeSupport apart = make_prime_support(4, 2, {{1, 2}, {3, 4}});
  CHECK_FALSE(is_towerizable(apart).has_value());
  CHECK_FALSE(is_towerizable_brute(apart).has_value());
}

TEST_CASE("the six pair support needs the residual part") {
  PrimeSupport u = make_prime_support(6, 2, {{1, 2}, {3, 4}, {5, 6}, {4, 6}, {1, 4}, {1, 6}});
  CHECK_FALSE(is_towerizable(u).has_value());
  CHECK_FALSE(is_towerizable_brute(u).has_value());
  auto g = is_generalized_towerizable(u);
  REQUIRE(g.has_value());
  CHECK(is_generalized_tower_set(g->decomp));
  CHECK(g->decomp.s.pts == g->w.image.pts);
  CHECK_FALSE(g->decomp.s0.empty());
}

TEST_CASE("fast and literal towerizability searches agree") {
  Rng rng(22);
  for (int k = 0; k < 60; ++k) {
    int n = draw(rng, 4, 7);
    int m = draw(rng, 2, 6);
    std::vector<std::vector<int>> primes;
    for (int j = 0; j < m; ++j) {
      int a = draw(rng, 1, n);
      int b = draw(rng, 1, n - 1);
      if (b >= a) ++b;
      std::vector<int> p = {std::min(a, b), std::max(a, b)};
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
    }
    PrimeSupport u = make_prime_support(n, 2, primes);
    auto fast = is_towerizable(u);
    auto slow = is_towerizable_brute(u);
    CHECK(fast.has_value() == slow.has_value());
    if (fast) CHECK(is_tower_set(fast->image));
  }
}

TEST_CASE("shared variables across a support point are rejected") {
  GTSDecomposition d = worked_decomposition();
  Family f1(6, Monomial::variable(1, 1));
  Family f2(6, Monomial::variable(1, 1));
  CHECK_THROWS_AS((void)generalized_tower_scheme_ideal(d, f1, f2, 1), input_error);
}
