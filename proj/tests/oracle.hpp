#pragma once

// Reference computations for the tests. Deliberately naive and independent of
// the library: plain nested vectors, modular arithmetic, exhaustive loops.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "pnr/group.hpp"

namespace oracle {

using Table = std::vector<std::vector<int>>;

inline Table cyclic(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// Z_m x Z_k with index a * k + b.
inline Table product(int m, int k) {
  const int n = m * k;
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = ((x / k + y / k) % m) * k + (x % k + y % k) % k;
  return t;
}

inline Table from(const pnr::CayleyTable& c) {
  Table t(c.size(), std::vector<int>(c.size()));
  for (int a = 0; a < c.size(); ++a)
    for (int b = 0; b < c.size(); ++b) t[a][b] = c(a, b);
  return t;
}

// Every permutation of 0..n-1 fixing 0 that preserves the table.
inline std::vector<std::vector<int>> automorphisms(const Table& add) {
  const int n = static_cast<int>(add.size());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = p[add[a][b]] == add[p[a]][p[b]];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

inline std::vector<int> distributive(const Table& add, const Table& mul) {
  const int n = static_cast<int>(add.size());
  std::vector<int> out;
  for (int d = 0; d < n; ++d) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b) ok = mul[d][add[a][b]] == add[mul[d][a]][mul[d][b]];
    if (ok) out.push_back(d);
  }
  return out;
}

inline std::vector<int> zero_multipliers(const Table& mul) {
  const int n = static_cast<int>(mul.size());
  std::vector<int> out;
  for (int b = 0; b < n; ++b) {
    bool zero = true;
    for (int a = 0; a < n; ++a) zero = zero && mul[a][b] == 0;
    if (zero) out.push_back(b);
  }
  return out;
}

inline int negate(const Table& add, int a) {
  for (int b = 0;; ++b)
    if (add[a][b] == 0) return b;
}

// Classes of a ~ b iff x*a = x*b for all x; planar iff at least three classes
// and x*a = x*b + c has exactly one solution x whenever a, b are inequivalent.
inline bool planar(const Table& add, const Table& mul) {
  const int n = static_cast<int>(add.size());
  auto column = [&](int a) {
    std::vector<int> c(n);
    for (int x = 0; x < n; ++x) c[x] = mul[x][a];
    return c;
  };
  std::set<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) classes.insert(column(a));
  if (classes.size() < 3) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (column(a) == column(b)) continue;
      for (int c = 0; c < n; ++c) {
        int solutions = 0;
        for (int x = 0; x < n; ++x) solutions += mul[x][a] == add[mul[x][b]][c];
        if (solutions != 1) return false;
      }
    }
  return true;
}

// Smallest additive subgroup containing the given elements.
inline std::set<int> closure(const Table& add, std::set<int> s) {
  s.insert(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a : std::vector<int>(s.begin(), s.end()))
      for (int b : std::vector<int>(s.begin(), s.end()))
        if (s.insert(add[a][b]).second) grew = true;
  }
  return s;
}

// GF(9) = Z3[i]/(i^2 + 1) with index a + 3b for a + b i.
struct Gf9 {
  static int add(int x, int y) { return (x % 3 + y % 3) % 3 + 3 * ((x / 3 + y / 3) % 3); }
  static int mul(int x, int y) {
    const int a = x % 3, b = x / 3, c = y % 3, d = y / 3;
    return ((a * c - b * d) % 3 + 3) % 3 + 3 * ((a * d + b * c) % 3);
  }
  static int pow(int x, int k) {
    int r = 1;
    while (k--) r = mul(r, x);
    return r;
  }
  static bool square(int y) {
    for (int x = 1; x < 9; ++x)
      if (mul(x, x) == y) return true;
    return false;
  }
  static int dickson(int x, int y) { return y == 0 ? 0 : square(y) ? mul(x, y) : mul(pow(x, 3), y); }
};

}  // namespace oracle
