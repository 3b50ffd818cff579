#include "cglq/ore.hpp"

namespace cglq {

OrePresentation::OrePresentation(int n, std::vector<std::vector<long>> lambda)
    : n_(n), lambda_(std::move(lambda)) {
  rel_delta_.assign(n_, std::vector<QElem>(n_, QElem(n_)));
}

OrePresentation OrePresentation::from_spec(const ExtensionSpec& spec) {
  std::vector<std::vector<long>> lam(spec.n, std::vector<long>(spec.n, 0));
  for (int i = 0; i < spec.n; ++i)
    for (int j = i + 1; j < spec.n; ++j) lam[i][j] = spec.lambda_pair(i, j);
  return OrePresentation(spec.n, std::move(lam));
}

const QElem& OrePresentation::rel_delta(int i, int j) const { return rel_delta_[i][j]; }

void OrePresentation::set_rel_delta(int i, int j, QElem value) {
  if (!(i < j)) fail(errc::internal, "relation tables are indexed by i < j");
  rel_delta_[i][j] = std::move(value);
  mul_memo_.clear();
  delta_memo_.clear();
}

QElem OrePresentation::delta_std(int j, int i) const {
  return rel_delta_[i][j] * QRational::q_power(static_cast<int>(lambda_[i][j]), -1);
}

bool OrePresentation::delta_row_zero(int i) const {
  for (int j = i + 1; j < n_; ++j)
    if (!rel_delta_[i][j].is_zero()) return false;
  return true;
}

// Normal form of X_j * X^w.
QElem OrePresentation::gen_times_mono(int j, const Exponent& w) const {
  int i = exp_min_var(w);
  if (i == -1 || i >= j) {
    Exponent e = w;
    e[j] += 1;
    return QElem(n_, e, QRational::one());
  }
  auto key = std::make_pair(j, w);
  auto it = mul_memo_.find(key);
  if (it != mul_memo_.end()) return it->second;

  // X_j X_i X^{w'} = q^{lambda_ij} X_i (X_j X^{w'}) + Delta_j(X_i) X^{w'}
  Exponent wp = w;
  wp[i] -= 1;
  QElem rec = gen_times_mono(j, wp);
  QElem first(n_);
  for (const auto& [e, c] : rec.terms()) {
    Exponent f = e;
    f[i] += 1;  // terms of rec live on variables >= i, so this stays ordered
    first.set(f, c * QRational::q_power(static_cast<int>(lambda_[i][j])));
  }
  QElem dj = delta_std(j, i);
  QElem result = first;
  if (!dj.is_zero()) result += mul(dj, QElem(n_, wp, QRational::one()));
  mul_memo_.emplace(std::move(key), result);
  return result;
}

QElem OrePresentation::mul(const QElem& a, const QElem& b) const {
  if (a.nvars() != n_ || b.nvars() != n_)
    fail(errc::length_mismatch, "element does not match the presentation");
  QElem r(n_);
  for (const auto& [u, cu] : a.terms()) {
    // X^u * b, applying generators right to left
    QElem acc = b;
    for (int j = n_; j-- > 0;) {
      for (int t = 0; t < u[j]; ++t) {
        QElem next(n_);
        for (const auto& [w, cw] : acc.terms()) {
          QElem gw = gen_times_mono(j, w);
          for (const auto& [e, c] : gw.terms()) next.add(e, c * cw);
        }
        acc = std::move(next);
      }
    }
    for (const auto& [e, c] : acc.terms()) r.add(e, c * cu);
  }
  return r;
}

QElem OrePresentation::mul(const QElem& a, const QElem& b, const QElem& c) const {
  return mul(mul(a, b), c);
}

void OrePresentation::check_support_below(int j, const QElem& a, const char* who) const {
  if (a.max_var() >= j)
    fail(errc::support_violation,
         std::string(who) + " needs support on variables below " + std::to_string(j + 1));
}

QElem OrePresentation::sigma(int j, const QElem& a) const {
  check_support_below(j, a, "sigma");
  QElem r(n_);
  for (const auto& [e, c] : a.terms()) {
    long s = 0;
    for (int i = 0; i < j; ++i)
      if (e[i] != 0) s += e[i] * lambda_[i][j];
    r.set(e, c * QRational::q_power(static_cast<int>(s)));
  }
  return r;
}

QElem OrePresentation::sigma_inv(int j, const QElem& a) const {
  check_support_below(j, a, "sigma_inv");
  QElem r(n_);
  for (const auto& [e, c] : a.terms()) {
    long s = 0;
    for (int i = 0; i < j; ++i)
      if (e[i] != 0) s += e[i] * lambda_[i][j];
    r.set(e, c * QRational::q_power(static_cast<int>(-s)));
  }
  return r;
}

QElem OrePresentation::sigma_prepend(int k, const QElem& a) const {
  if (a.min_var() <= k && !a.is_zero() && a.min_var() != -1)
    fail(errc::support_violation, "prepend twist needs support above the adjoined generator");
  QElem r(n_);
  for (const auto& [e, c] : a.terms()) {
    long s = 0;
    for (int j = k + 1; j < n_; ++j)
      if (e[j] != 0) s += e[j] * lambda_[k][j];
    r.set(e, c * QRational::q_power(static_cast<int>(-s)));
  }
  return r;
}

QElem OrePresentation::apply_delta(int j, const QElem& a) const {
  check_support_below(j, a, "apply_delta");
  QElem r(n_);
  for (const auto& [w, cw] : a.terms()) {
    // Delta_j(X^w) by the twisted Leibniz rule, memoized per monomial.
    auto key = std::make_pair(j, w);
    auto it = delta_memo_.find(key);
    if (it == delta_memo_.end()) {
      QElem value(n_);
      int i = exp_min_var(w);
      if (i != -1) {
        Exponent wp = w;
        wp[i] -= 1;
        QElem tail_val = apply_delta(j, QElem(n_, wp, QRational::one()));
        // sigma_j(X_i) Delta_j(X^{w'})
        for (const auto& [e, c] : tail_val.terms()) {
          Exponent f = e;
          f[i] += 1;
          value.add(f, c * QRational::q_power(static_cast<int>(lambda_[i][j])));
        }
        QElem di = delta_std(j, i);
        if (!di.is_zero()) value += mul(di, QElem(n_, wp, QRational::one()));
      }
      it = delta_memo_.emplace(std::move(key), std::move(value)).first;
    }
    for (const auto& [e, c] : it->second.terms()) r.add(e, c * cw);
  }
  return r;
}

std::optional<Weight> ore_weight(const ExtensionSpec& spec, const QElem& a) {
  if (a.is_zero()) fail(errc::zero_input, "weight of zero element");
  std::optional<Weight> w;
  for (const auto& [e, c] : a.terms()) {
    Weight we(spec.r, 0);
    for (int i = 0; i < spec.n; ++i)
      if (e[i] != 0)
        for (int t = 0; t < spec.r; ++t) we[t] += static_cast<long>(e[i]) * spec.lambda[i][t];
    if (!w)
      w = we;
    else if (*w != we)
      return std::nullopt;
  }
  return w;
}

}  // namespace cglq
