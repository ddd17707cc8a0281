#pragma once

#include <cstdint>
#include <vector>

namespace tws {

// dense polynomial in t with integer coefficients, index = exponent
struct ZPoly {
  std::vector<long long> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }

  static ZPoly zero() { return ZPoly(); }
  static ZPoly one() { return ZPoly({1}); }
  static ZPoly t_power(int k);
  static ZPoly one_minus_t_power(int d);  // 1 - t^d

  void trim();
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  long long at(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : 0; }
  long long eval_one() const;

  ZPoly& operator+=(const ZPoly& o);
  ZPoly& operator-=(const ZPoly& o);
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  bool operator==(const ZPoly& o) const { return c == o.c; }
};

// quotient of p by (1 - t); exact iff p(1) == 0
bool divide_by_one_minus_t(const ZPoly& p, ZPoly& q);

// first dmax+1 coefficients of the power series p(t) / (1 - t)^n
std::vector<long long> series_coefficients(const ZPoly& p, int n, int dmax);

}  // namespace tws
