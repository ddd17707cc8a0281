#include "towerset/zpoly.hpp"

#include <algorithm>

namespace tws {

ZPoly ZPoly::t_power(int k) {
  ZPoly p;
  p.c.assign(k + 1, 0);
  p.c[k] = 1;
  return p;
}

ZPoly ZPoly::one_minus_t_power(int d) {
  ZPoly p;
  p.c.assign(d + 1, 0);
  p.c[0] = 1;
  p.c[d] -= 1;
  p.trim();
  return p;
}

void ZPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

long long ZPoly::eval_one() const {
  long long s = 0;
  for (long long v : c) s += v;
  return s;
}

ZPoly& ZPoly::operator+=(const ZPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
  for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& o) {
  if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
  for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZPoly();
  ZPoly p;
  p.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) p.c[i + j] += a.c[i] * b.c[j];
  }
  p.trim();
  return p;
}

bool divide_by_one_minus_t(const ZPoly& p, ZPoly& q) {
  // p = (1-t) q  =>  q_i = sum_{j<=i} p_j, exact iff total sum is 0
  q.c.clear();
  if (p.is_zero()) return true;
  long long run = 0;
  for (size_t i = 0; i + 1 <= p.c.size(); ++i) {
    run += p.c[i];
    q.c.push_back(run);
  }
  if (run != 0) return false;
  q.c.pop_back();  // top accumulator is the exactness witness, not a coefficient
  q.trim();
  return true;
}

std::vector<long long> series_coefficients(const ZPoly& p, int n, int dmax) {
  std::vector<long long> s(dmax + 1, 0);
  for (int i = 0; i <= dmax; ++i) s[i] = p.at(i);
  for (int k = 0; k < n; ++k)
    for (int i = 1; i <= dmax; ++i) s[i] += s[i - 1];
  return s;
}

}  // namespace tws
