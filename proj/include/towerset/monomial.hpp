#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "towerset/zpoly.hpp"

namespace tws {

// monomial in k[x_1..x_n], stored as an exponent vector
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(int n, int i);                          // 1-based i
  static Monomial from_support(int n, const std::vector<int>& s);  // squarefree

  int n() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  std::uint64_t support_mask() const;  // bit i-1 set iff x_i divides; needs n <= 64
  std::vector<int> support() const;    // 1-based, ascending

  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const;
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial product(const Monomial& a, const Monomial& b);
Monomial quotient_exact(const Monomial& a, const Monomial& b);  // a / b, b | a

// the canonical order used everywhere: total degree, then exponent vector lex
bool canonical_less(const Monomial& a, const Monomial& b);

// a monomial ideal kept with its minimal generators in canonical order
struct MonomialIdeal {
  int n = 0;
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool contains(const Monomial& m) const;
};

MonomialIdeal minimize(int n, std::vector<Monomial> gens);
bool ideal_equal(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect_all(int n, const std::vector<MonomialIdeal>& parts);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon_monomial(const MonomialIdeal& i, const Monomial& m);

// a list of variable subsets, e.g. the support of a union of coordinate spaces
struct PrimeSupport {
  int n = 0;
  int c = 0;
  std::vector<std::vector<int>> primes;  // each ascending; list sorted
};

PrimeSupport make_prime_support(int n, int c, std::vector<std::vector<int>> primes);
MonomialIdeal ideal_from_support(const PrimeSupport& s);
std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& i);
std::pair<int, bool> height_and_equidimensional(const MonomialIdeal& i);

ZPoly hilbert_numerator(const MonomialIdeal& i);
// h-vector and multiplicity assuming codimension c
std::pair<std::vector<long long>, long long> h_vector_and_degree(const MonomialIdeal& i, int c);
std::vector<long long> brute_hilbert_function(const MonomialIdeal& i, int dmax);

}  // namespace tws
