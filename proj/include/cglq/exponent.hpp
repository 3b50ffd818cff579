#pragma once

#include <vector>

#include "cglq/errors.hpp"

namespace cglq {

// Multidegree of a monomial. Entries may be negative for Laurent monomials.
using Exponent = std::vector<int>;

// Total order on Z^r with the *last* coordinate most significant:
// u < v iff at the largest index where they differ, u is smaller.
// The same order serves for monomial degrees in N^n and torus weights.
inline int compare_total_order(const Exponent& u, const Exponent& v) {
  if (u.size() != v.size())
    fail(errc::length_mismatch, "exponent lengths " + std::to_string(u.size()) + " vs " +
                                    std::to_string(v.size()));
  for (size_t i = u.size(); i-- > 0;) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

struct TotalOrderLess {
  bool operator()(const Exponent& u, const Exponent& v) const {
    return compare_total_order(u, v) < 0;
  }
};

inline Exponent exp_zero(int n) { return Exponent(n, 0); }

inline Exponent exp_unit(int n, int i) {
  Exponent e(n, 0);
  e[i] = 1;
  return e;
}

inline Exponent exp_add(const Exponent& u, const Exponent& v) {
  Exponent w = u;
  for (size_t i = 0; i < w.size(); ++i) w[i] += v[i];
  return w;
}

inline Exponent exp_sub(const Exponent& u, const Exponent& v) {
  Exponent w = u;
  for (size_t i = 0; i < w.size(); ++i) w[i] -= v[i];
  return w;
}

inline Exponent exp_neg(const Exponent& u) {
  Exponent w = u;
  for (auto& x : w) x = -x;
  return w;
}

inline bool exp_is_zero(const Exponent& u) {
  for (int x : u)
    if (x != 0) return false;
  return true;
}

inline bool exp_nonnegative(const Exponent& u) {
  for (int x : u)
    if (x < 0) return false;
  return true;
}

// Smallest variable index with nonzero exponent, or -1 for the unit monomial.
inline int exp_min_var(const Exponent& u) {
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0) return static_cast<int>(i);
  return -1;
}

inline int exp_max_var(const Exponent& u) {
  for (size_t i = u.size(); i-- > 0;)
    if (u[i] != 0) return static_cast<int>(i);
  return -1;
}

inline int exp_total_degree(const Exponent& u) {
  int d = 0;
  for (int x : u) d += x;
  return d;
}

}  // namespace cglq
