#include <vector>

#include "doctest.h"
#include "towerset/common.hpp"
#include "towerset/monomial.hpp"
#include "towerset/pointset.hpp"
#include "towerset/random_gen.hpp"
#include "towerset/resolution.hpp"

using namespace tws;

namespace {

PointSet pts(int c, std::vector<Point> p) { return make_point_set(c, std::move(p)); }

}  // namespace

TEST_CASE("tower property on small examples") {
  CHECK(is_tower_set(pts(2, {{5, 7}})));
  CHECK(is_tower_set(pts(2, {{2, 1}, {3, 1}, {3, 2}})));
  CHECK_FALSE(is_tower_set(pts(2, {{1, 2}, {2, 1}})));
  CHECK(is_tower_set(pts(3, {{2, 1, 1}, {3, 1, 1}, {3, 2, 1}})));
  CHECK_FALSE(is_tower_set(pts(3, {{2, 1, 1}, {1, 1, 2}})));
}

TEST_CASE("hash of the standard three point tower") {
  PointSet t = pts(2, {{2, 1}, {3, 1}, {3, 2}});
  PointSet h = sigma_hash(t);
  CHECK(h.pts == pts(2, {{1, 1}, {1, 2}, {2, 1}}).pts);
  CHECK(is_left_segment(h));
}

TEST_CASE("left segment recognition and generators") {
  PointSet l = pts(2, {{1, 1}, {2, 1}, {1, 2}});
  CHECK(is_left_segment(l));
  CHECK_FALSE(is_left_segment(pts(2, {{2, 1}})));
  PointSet gens = left_segment_generators(l);
  CHECK(gens.pts == pts(2, {{1, 2}, {2, 1}}).pts);
  CHECK(segment_size(l) == Point{2, 2});
  CHECK(h_vector_of_segment(l) == std::vector<long long>{1, 2});
  CHECK(downward_closure(2, gens.pts).pts == l.pts);
}

TEST_CASE("scaling a segment by a degree table") {
  PointSet l = downward_closure(2, {{2, 1}, {1, 2}});
  DegreeTable d;
  d.d = {{1, 2}, {1, 3}};
  PointSet scaled = scale_segment(l, d);
  CHECK(is_left_segment(scaled));
  PointSet gens = left_segment_generators(scaled);
  CHECK(gens.pts == pts(2, {{1, 4}, {3, 1}}).pts);
  CHECK(h_vector_of_segment(scaled) == std::vector<long long>{1, 2, 2, 1});
}

TEST_CASE("scaling a single point gives a box") {
  PointSet l = pts(2, {{1, 1}});
  DegreeTable d;
  d.d = {{2}, {5}};
  PointSet scaled = scale_segment(l, d);
  CHECK(scaled.pts.size() == 10);
  CHECK(h_vector_of_segment(scaled) == std::vector<long long>{1, 2, 2, 2, 2, 1});
}

TEST_CASE("star configurations are strictly decreasing tuples") {
  PointSet s = star_configuration(3, 2);
  CHECK(s.pts == pts(2, {{2, 1}, {3, 1}, {3, 2}}).pts);
  PointSet w = star_configuration(4, 3);
  CHECK((int)w.pts.size() == 4);  // choose(4,3)
  CHECK(is_tower_set(w));
  for (const Point& p : w.pts) {
    CHECK(p[0] > p[1]);
    CHECK(p[1] > p[2]);
  }
}

TEST_CASE("tower ideal of the three point tower with explicit families") {
  PointSet t = pts(2, {{2, 1}, {3, 1}, {3, 2}});
  // coordinate one uses x1..x3, coordinate two uses x4,x5
  std::vector<Family> fams(2);
  fams[0] = {Monomial::variable(5, 1), Monomial::variable(5, 2), Monomial::variable(5, 3)};
  fams[1] = {Monomial::variable(5, 4), Monomial::variable(5, 5)};
  MonomialIdeal i = tower_scheme_ideal(t, fams, 5);
  CHECK(projective_dimension(i) == 2);
  CHECK(is_acm(i));
  auto hd = h_vector_and_degree(i, 2);
  CHECK(hd.first == tower_h_vector(t, all_ones_table(segment_size(sigma_hash(t)))));
  CHECK(hd.second == 3);
}

TEST_CASE("degree assignment follows the branch filtration") {
  PointSet t = pts(2, {{2, 1}, {3, 1}, {3, 2}});
  DegreeTable d;
  d.d = {{1, 2}, {1, 1}};
  CHECK(tower_h_vector(t, d) == std::vector<long long>{1, 2, 1});
  Realization real = realize_degree_table(t, d);
  MonomialIdeal i = tower_scheme_ideal(t, real.fams, real.n);
  auto hd = h_vector_and_degree(i, 2);
  // value three sits in the smaller branch, so it gets the degree one slot
  CHECK(hd.first == std::vector<long long>{1, 2, 1});
  CHECK(hd.second == 4);
}

TEST_CASE("non chain branches admit no product realization") {
  PointSet t = pts(3, {{1, 1, 1}, {2, 1, 1}, {3, 1, 1}, {1, 2, 1}, {2, 2, 1}, {1, 1, 2},
                       {3, 1, 2}});
  REQUIRE(is_tower_set(t));
  DegreeTable d;
  d.d = {{1, 1, 1}, {1, 1}, {1, 1}};
  CHECK_THROWS_AS((void)realize_degree_table(t, d), input_error);
  // the scheme itself still exists for directly chosen families
  std::vector<Family> fams(3);
  for (int v = 1; v <= 3; ++v) fams[0].push_back(Monomial::variable(7, v));
  for (int v = 4; v <= 5; ++v) fams[1].push_back(Monomial::variable(7, v));
  for (int v = 6; v <= 7; ++v) fams[2].push_back(Monomial::variable(7, v));
  MonomialIdeal i = tower_scheme_ideal(t, fams, 7);
  CHECK(projective_dimension(i) == 3);
}

TEST_CASE("random sub towers stay towers and hashes nest") {
  Rng rng(5);
  for (int k = 0; k < 25; ++k) {
    PointSet t = random_tower_set(rng, 2 + (k % 2), 6, 10);
    REQUIRE(is_tower_set(t));
    PointSet sub = random_sub_tower(rng, t, 3);
    REQUIRE(is_tower_set(sub));
    PointSet ht = sigma_hash(t);
    for (const Point& p : sigma_hash(sub).pts) CHECK(ht.contains(p));
  }
}

TEST_CASE("degree table smaller than the segment is rejected") {
  PointSet t = pts(2, {{2, 1}, {3, 1}, {3, 2}});
  DegreeTable d;
  d.d = {{1}, {1, 1}};
  CHECK_THROWS_AS((void)realize_degree_table(t, d), input_error);
}
