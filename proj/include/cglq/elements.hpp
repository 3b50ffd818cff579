#pragma once

#include <map>
#include <optional>
#include <string>

#include "cglq/exponent.hpp"
#include "cglq/kernels.hpp"
#include "cglq/qscalar.hpp"

namespace cglq {

// Sparse multivariate element: exponent vector -> coefficient, never storing
// zero coefficients. Map keys are ordered by the graded total order, so the
// last entry is the leading term. Used both for commutative (Laurent)
// polynomials over Q and for Ore / quantum-torus elements over Q(q).
template <class C>
class Sparse {
 public:
  using Coef = C;
  using Map = std::map<Exponent, C, TotalOrderLess>;

  Sparse() = default;
  explicit Sparse(int nvars) : n_(nvars) {}
  Sparse(int nvars, const Exponent& e, const C& c) : n_(nvars) { set(e, c); }

  static Sparse constant(int nvars, const C& c) { return Sparse(nvars, exp_zero(nvars), c); }
  static Sparse variable(int nvars, int i, const C& c = C(1)) {
    return Sparse(nvars, exp_unit(nvars, i), c);
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const Map& terms() const { return t_; }

  C coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? C(0) : it->second;
  }

  void set(const Exponent& e, const C& c) {
    check_len(e);
    if (c == C(0))
      t_.erase(e);
    else
      t_[e] = c;
  }

  void add(const Exponent& e, const C& c) {
    check_len(e);
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (!(c == C(0))) t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == C(0)) t_.erase(it);
    }
  }

  // Degree in the graded order; errors on zero.
  const Exponent& degree() const {
    if (t_.empty()) fail(errc::zero_input, "degree of zero element");
    return t_.rbegin()->first;
  }
  const C& leading_coeff() const {
    if (t_.empty()) fail(errc::zero_input, "leading coefficient of zero element");
    return t_.rbegin()->second;
  }

  bool is_monomial() const { return t_.size() == 1; }
  bool is_polynomial() const {  // no negative exponents anywhere
    for (const auto& [e, c] : t_)
      if (!exp_nonnegative(e)) return false;
    return true;
  }

  // Largest variable index appearing, or -1 for constants.
  int max_var() const {
    int m = -1;
    for (const auto& [e, c] : t_) m = std::max(m, exp_max_var(e));
    return m;
  }
  int min_var() const {
    int m = n_;
    for (const auto& [e, c] : t_) {
      int v = exp_min_var(e);
      if (v >= 0) m = std::min(m, v);
    }
    return m == n_ ? -1 : m;
  }
  bool supported_in(int lo, int hi) const {  // all variables in [lo, hi]
    for (const auto& [e, c] : t_)
      for (int i = 0; i < n_; ++i)
        if (e[i] != 0 && (i < lo || i > hi)) return false;
    return true;
  }

  Sparse& operator+=(const Sparse& o) {
    check_same(o);
    for (const auto& [e, c] : o.t_) add(e, c);
    return *this;
  }
  Sparse& operator-=(const Sparse& o) {
    check_same(o);
    for (const auto& [e, c] : o.t_) add(e, -c);
    return *this;
  }
  Sparse operator+(const Sparse& o) const {
    Sparse r = *this;
    r += o;
    return r;
  }
  Sparse operator-(const Sparse& o) const {
    Sparse r = *this;
    r -= o;
    return r;
  }
  Sparse operator-() const {
    Sparse r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
  }
  Sparse operator*(const C& c) const {
    Sparse r(n_);
    if (c == C(0)) return r;
    for (const auto& [e, v] : t_) r.t_[e] = v * c;
    return r;
  }
  bool operator==(const Sparse& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const Sparse& o) const { return !(*this == o); }

  std::vector<std::pair<Exponent, C>> term_list() const {
    return {t_.begin(), t_.end()};
  }

 private:
  void check_len(const Exponent& e) const {
    if (static_cast<int>(e.size()) != n_)
      fail(errc::length_mismatch, "exponent length " + std::to_string(e.size()) +
                                      " in element over " + std::to_string(n_) + " variables");
  }
  void check_same(const Sparse& o) const {
    if (n_ != o.n_) fail(errc::length_mismatch, "mixing elements over different variable counts");
  }

  int n_ = 0;
  Map t_;
};

// Commutative polynomial / Laurent element over Q (in x- or y-variables).
using MPoly = Sparse<Rational>;
// Ore extension / quantum torus element over Q(q) (X- or Y-variables).
using QElem = Sparse<QRational>;

// Commutative product (kernel-backed).
MPoly mul(const MPoly& a, const MPoly& b);
MPoly pow(const MPoly& a, int e);

// Coefficientwise q = 1. Errors if a coefficient has a pole there.
MPoly eval_at_one(const QElem& a);

// Lift a rational-coefficient element into Q(q) coefficients unchanged.
QElem lift(const MPoly& a);

// True iff every coefficient lies in L.
bool all_coeffs_in_L(const QElem& a);

// Exact scalar quotient a / b for b a nonzero monomial (commutative Laurent sense).
MPoly div_mono(const MPoly& a, const Exponent& e, const Rational& c);

// If a == c * b for a scalar c (exact), return c.
std::optional<Rational> scalar_ratio(const MPoly& a, const MPoly& b);
std::optional<QRational> scalar_ratio(const QElem& a, const QElem& b);

}  // namespace cglq
