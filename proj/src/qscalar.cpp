#include "cglq/qscalar.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace cglq {

std::string rational_str(const Rational& r) { return r.get_str(); }

QLaurent::QLaurent(const Rational& c) {
  if (c != 0) terms_[0] = c;
}

QLaurent::QLaurent(long c) {
  if (c != 0) terms_[0] = Rational(c);
}

QLaurent QLaurent::q_power(int e, const Rational& c) {
  QLaurent r;
  if (c != 0) r.terms_[e] = c;
  return r;
}

QLaurent QLaurent::q_minus_one() {
  QLaurent r;
  r.terms_[1] = 1;
  r.terms_[0] = -1;
  return r;
}

bool QLaurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

bool QLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int QLaurent::min_exp() const {
  if (is_zero()) fail(errc::zero_input, "min_exp of zero");
  return terms_.begin()->first;
}

int QLaurent::max_exp() const {
  if (is_zero()) fail(errc::zero_input, "max_exp of zero");
  return terms_.rbegin()->first;
}

Rational QLaurent::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational QLaurent::leading_coeff() const { return terms_.rbegin()->second; }

void QLaurent::set(int e, const Rational& c) {
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) { return *this += -o; }

QLaurent QLaurent::operator-() const {
  QLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
  QLaurent r = *this;
  r += o;
  return r;
}

QLaurent QLaurent::operator-(const QLaurent& o) const {
  QLaurent r = *this;
  r -= o;
  return r;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
  QLaurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Rational p = c1 * c2;
      auto it = r.terms_.find(e1 + e2);
      if (it == r.terms_.end()) {
        if (p != 0) r.terms_.emplace(e1 + e2, p);
      } else {
        it->second += p;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

QLaurent QLaurent::operator*(const Rational& c) const {
  QLaurent r;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

Rational QLaurent::eval_at_one() const {
  Rational s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

QLaurent QLaurent::divide_by_q_minus_one() const {
  if (is_zero()) return QLaurent();
  if (eval_at_one() != 0)
    fail(errc::not_divisible, "value at q=1 is " + rational_str(eval_at_one()) + ", not 0");
  // Synthetic division of the shifted polynomial by (q - 1).
  int lo = min_exp(), hi = max_exp();
  std::vector<Rational> a(hi - lo + 1, Rational(0));
  for (const auto& [e, c] : terms_) a[e - lo] = c;
  std::vector<Rational> b(a.size() - 1, Rational(0));
  Rational carry(0);
  for (size_t i = a.size(); i-- > 1;) {
    carry += a[i];
    b[i - 1] = carry;
  }
  QLaurent r;
  for (size_t i = 0; i < b.size(); ++i) r.set(static_cast<int>(i) + lo, b[i]);
  return r;
}

namespace {

// Dense ascending-coefficient view of a Laurent element shifted to valuation 0.
struct Dense {
  std::vector<Rational> c;  // c[0] != 0 and c.back() != 0 unless empty
  int shift = 0;            // original min exponent
};

Dense to_dense(const QLaurent& a) {
  Dense d;
  if (a.is_zero()) return d;
  d.shift = a.min_exp();
  d.c.assign(a.max_exp() - d.shift + 1, Rational(0));
  for (const auto& [e, v] : a.terms()) d.c[e - d.shift] = v;
  return d;
}

QLaurent from_dense(const std::vector<Rational>& c, int shift) {
  QLaurent r;
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r.set(static_cast<int>(i) + shift, c[i]);
  return r;
}

void trim(std::vector<Rational>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Polynomial division: a = quo*b + rem with deg rem < deg b. Coefficients exact.
void divmod(std::vector<Rational> a, const std::vector<Rational>& b, std::vector<Rational>& quo,
            std::vector<Rational>& rem) {
  trim(a);
  quo.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    Rational f = a.back() / b.back();
    size_t off = a.size() - b.size();
    quo[off] = f;
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  rem = std::move(a);
}

std::vector<Rational> poly_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::vector<Rational> q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
    trim(b);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& x : a) x /= lc;
  }
  return a;
}

}  // namespace

QLaurent QLaurent::div_exact(const QLaurent& divisor) const {
  if (divisor.is_zero()) fail(errc::zero_input, "division by zero Laurent polynomial");
  if (is_zero()) return QLaurent();
  Dense da = to_dense(*this), db = to_dense(divisor);
  std::vector<Rational> quo, rem;
  divmod(da.c, db.c, quo, rem);
  if (!rem.empty()) fail(errc::not_divisible, "inexact Laurent division");
  return from_dense(quo, da.shift - db.shift);
}

QLaurent QLaurent::gcd(const QLaurent& a, const QLaurent& b) {
  if (a.is_zero() && b.is_zero()) return QLaurent();
  if (a.is_zero()) return from_dense(poly_gcd(to_dense(b).c, {}), 0);
  if (b.is_zero()) return from_dense(poly_gcd(to_dense(a).c, {}), 0);
  return from_dense(poly_gcd(to_dense(a).c, to_dense(b).c), 0);
}

std::string QLaurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // ascending q-exponent, constant term first
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << rational_str(mag);
    } else {
      if (mag != 1) os << rational_str(mag) << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

QRational::QRational(const QLaurent& num, const QLaurent& den) : num_(num), den_(den) {
  if (den_.is_zero()) fail(errc::zero_input, "zero denominator");
  normalize();
}

QRational QRational::q_power(int e, const Rational& c) {
  return QRational(QLaurent::q_power(e, c));
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QLaurent::one();
    return;
  }
  // Strip q-power units so gcd runs on honest polynomials.
  int a = num_.min_exp(), b = den_.min_exp();
  QLaurent n1 = num_.div_exact(QLaurent::q_power(a));
  QLaurent d1 = den_.div_exact(QLaurent::q_power(b));
  QLaurent g = QLaurent::gcd(n1, d1);
  if (!g.is_one() && !g.is_zero()) {
    n1 = n1.div_exact(g);
    d1 = d1.div_exact(g);
  }
  if (d1.is_monomial()) {
    // Unit denominator: fold it into the numerator entirely.
    num_ = n1.div_exact(d1) * QLaurent::q_power(a - b);
    den_ = QLaurent::one();
    return;
  }
  Rational lc = d1.leading_coeff();
  num_ = n1.div_exact(QLaurent(lc)) * QLaurent::q_power(a - b);
  den_ = d1.div_exact(QLaurent(lc));
}

QLaurent QRational::to_laurent() const {
  if (!is_in_L()) fail(errc::coefficient_not_in_l, "denominator " + den_.str() + " is not a unit");
  return num_;
}

QRational QRational::operator+(const QRational& o) const {
  return QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator-(const QRational& o) const {
  return QRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator*(const QRational& o) const {
  return QRational(num_ * o.num_, den_ * o.den_);
}

QRational QRational::operator/(const QRational& o) const {
  if (o.is_zero()) fail(errc::zero_input, "division by zero");
  return QRational(num_ * o.den_, den_ * o.num_);
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational QRational::inverse() const {
  if (is_zero()) fail(errc::zero_input, "inverse of zero");
  return QRational(den_, num_);
}

Rational QRational::eval_at_one() const {
  Rational d = den_.eval_at_one();
  if (d == 0) fail(errc::not_divisible, "denominator (" + den_.str() + ") vanishes at q=1");
  return num_.eval_at_one() / d;
}

std::string QRational::str() const {
  if (den_.is_one()) {
    // Pull out a common integer denominator of the coefficients for display.
    if (!num_.is_zero() && num_.terms().size() > 1) {
      mpz_class common(1);
      for (const auto& [e, c] : num_.terms()) common = lcm(common, c.get_den());
      if (common > 1) {
        QLaurent scaled = num_ * Rational(common);
        return "(" + scaled.str() + ")/" + common.get_str();
      }
    }
    return num_.str();
  }
  std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
  return n + "/(" + den_.str() + ")";
}

}  // namespace cglq
