#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "cglq/errors.hpp"

namespace cglq {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r);

// Laurent polynomial in the deformation parameter q with rational coefficients.
// Stored sparsely as exponent -> coefficient with no zero coefficients.
class QLaurent {
 public:
  QLaurent() = default;
  explicit QLaurent(const Rational& c);
  explicit QLaurent(long c);

  static QLaurent q_power(int e, const Rational& c = Rational(1));
  static QLaurent one() { return QLaurent(1); }
  // q - 1
  static QLaurent q_minus_one();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int e) const;
  Rational leading_coeff() const;
  const std::map<int, Rational>& terms() const { return terms_; }
  void set(int e, const Rational& c);

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent operator-() const;
  QLaurent operator+(const QLaurent& o) const;
  QLaurent operator-(const QLaurent& o) const;
  QLaurent operator*(const QLaurent& o) const;
  QLaurent operator*(const Rational& c) const;
  bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  // Substitution q = 1, i.e. the sum of all coefficients.
  Rational eval_at_one() const;

  // Exact division by q - 1. Requires eval_at_one() == 0.
  QLaurent divide_by_q_minus_one() const;

  // Exact division by a Laurent divisor; remainder must vanish.
  QLaurent div_exact(const QLaurent& divisor) const;

  // Monic polynomial gcd (q-power units stripped first).
  static QLaurent gcd(const QLaurent& a, const QLaurent& b);

  std::string str() const;

 private:
  std::map<int, Rational> terms_;
};

// Element of the fraction field Q(q), kept in a canonical reduced form:
// numerator and denominator coprime, denominator monic with nonzero
// constant term, and denominators that are units of L absorbed into the
// numerator (so membership in L is visible as denominator == 1).
class QRational {
 public:
  QRational() : den_(QLaurent::one()) {}
  QRational(const QLaurent& num, const QLaurent& den);
  explicit QRational(const QLaurent& num) : QRational(num, QLaurent::one()) {}
  explicit QRational(const Rational& c) : QRational(QLaurent(c)) {}
  explicit QRational(long c) : QRational(QLaurent(c)) {}

  static QRational q_power(int e, const Rational& c = Rational(1));
  static QRational one() { return QRational(1); }

  const QLaurent& num() const { return num_; }
  const QLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }

  // True iff this element lies in L = Q[q, q^-1].
  bool is_in_L() const { return den_.is_one(); }
  // Conversion to L; errors with CoefficientNotInL when the denominator is not a unit.
  QLaurent to_laurent() const;

  QRational operator+(const QRational& o) const;
  QRational operator-(const QRational& o) const;
  QRational operator*(const QRational& o) const;
  QRational operator/(const QRational& o) const;
  QRational operator-() const;
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  bool operator==(const QRational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRational& o) const { return !(*this == o); }

  QRational inverse() const;

  // q = 1; errors when the reduced denominator vanishes there.
  Rational eval_at_one() const;

  std::string str() const;

 private:
  void normalize();

  QLaurent num_;
  QLaurent den_;
};

}  // namespace cglq
