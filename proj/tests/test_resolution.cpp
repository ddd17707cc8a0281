#include <vector>

#include "doctest.h"
#include "towerset/monomial.hpp"
#include "towerset/random_gen.hpp"
#include "towerset/resolution.hpp"

using namespace tws;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

bool same_table(const BettiTable& a, const BettiTable& b) {
  if (a.n != b.n || a.pd != b.pd || a.entries.size() != b.entries.size()) return false;
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    const BettiEntry& x = a.entries[k];
    const BettiEntry& y = b.entries[k];
    if (x.i != y.i || x.sigma != y.sigma || x.value != y.value) return false;
  }
  return true;
}

MonomialIdeal worked_ideal() {
  MonomialIdeal i;
  i.n = 6;
  i.gens = {mono({0, 1, 0, 1, 0, 1}), mono({1, 0, 0, 1, 0, 1}), mono({1, 0, 1, 0, 0, 1}),
            mono({1, 0, 0, 1, 1, 0})};
  return i;
}

}  // namespace

TEST_CASE("koszul resolution of three variables") {
  MonomialIdeal i;
  i.n = 3;
  i.gens = {Monomial::variable(3, 1), Monomial::variable(3, 2), Monomial::variable(3, 3)};
  BettiTable t = betti_numbers(i);
  CHECK(t.pd == 3);
  CHECK(t.total(0) == 1);
  CHECK(t.total(1) == 3);
  CHECK(t.total(2) == 3);
  CHECK(t.total(3) == 1);
  CHECK(t.entries.size() == 8);
  for (const BettiEntry& e : t.entries) {
    CHECK(e.value == 1);
    CHECK((int)e.sigma.size() == e.i);
  }
}

TEST_CASE("four cubics resolving in length two") {
  MonomialIdeal i = worked_ideal();
  BettiTable t = betti_numbers(i);
  CHECK(t.pd == 2);
  CHECK(t.total(1) == 4);
  CHECK(t.total(2) == 3);
  CHECK(is_acm(i));
  auto he = height_and_equidimensional(i);
  CHECK(he.first == 2);
  CHECK(he.second);
}

TEST_CASE("two disjoint planes drop depth") {
  // (x1,x2) meet (x3,x4) is connected in codimension two but has depth one
  MonomialIdeal i;
  i.n = 4;
  i.gens = {mono({1, 0, 1, 0}), mono({1, 0, 0, 1}), mono({0, 1, 1, 0}), mono({0, 1, 0, 1})};
  auto he = height_and_equidimensional(i);
  CHECK(he.first == 2);
  CHECK(he.second);
  CHECK(projective_dimension(i) == 3);
  CHECK_FALSE(is_acm(i));
}

TEST_CASE("both engines produce the same table") {
  Rng rng(11);
  for (int k = 0; k < 40; ++k) {
    MonomialIdeal i = random_squarefree_ideal(rng, 2 + (int)draw(rng, 0, 4), 6);
    ResolutionOptions restriction;
    restriction.engine = 1;
    ResolutionOptions nerve;
    nerve.engine = 2;
    CHECK(same_table(betti_numbers(i, restriction), betti_numbers(i, nerve)));
  }
}

TEST_CASE("thread count does not change the table") {
  Rng rng(12);
  for (int k = 0; k < 15; ++k) {
    MonomialIdeal i = random_squarefree_ideal(rng, 6, 8);
    ResolutionOptions serial;
    ResolutionOptions wide;
    wide.threads = 4;
    CHECK(same_table(betti_numbers(i, serial), betti_numbers(i, wide)));
  }
}

TEST_CASE("taylor route agrees with the simplicial route") {
  Rng rng(13);
  for (int k = 0; k < 50; ++k) {
    MonomialIdeal i = random_squarefree_ideal(rng, 2 + (int)draw(rng, 0, 4), 6);
    CHECK(same_table(taylor_betti(i), betti_numbers(i)));
    CHECK(taylor_pd_oracle(i) == projective_dimension(i));
  }
}

TEST_CASE("alternating sum of the table recovers the numerator") {
  Rng rng(14);
  for (int k = 0; k < 40; ++k) {
    MonomialIdeal i = random_squarefree_ideal(rng, 2 + (int)draw(rng, 0, 5), 7);
    CHECK(euler_numerator(betti_numbers(i)) == hilbert_numerator(i));
  }
  CHECK(euler_numerator(betti_numbers(worked_ideal())) == hilbert_numerator(worked_ideal()));
}
