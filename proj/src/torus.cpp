#include "cglq/torus.hpp"

#include "cglq/kernels.hpp"

namespace cglq {

QElem QTorusPresentation::mul(const QElem& a, const QElem& b) const {
  if (a.nvars() != n || b.nvars() != n)
    fail(errc::length_mismatch, "element does not match the torus");
  QElem r(n);
  if (a.is_zero() || b.is_zero()) return r;
  kernels::QMap out;
  kernels::product_twisted(a.term_list(), b.term_list(), l, out);
  for (auto& [e, c] : out) r.set(e, c);
  return r;
}

QElem QTorusPresentation::mul(const QElem& a, const QElem& b, const QElem& c) const {
  return mul(mul(a, b), c);
}

QElem QTorusPresentation::inv_mono(const QElem& m) const {
  if (!m.is_monomial()) fail(errc::not_a_monomial, "only monomials are invertible in the torus");
  const auto& [v, c] = *m.terms().begin();
  // Y^v * Y^{-v} = q^t with t the reordering cost, so scale the inverse by q^{-t}.
  long t = kernels::reorder_exponent(l, v, exp_neg(v));
  return QElem(n, exp_neg(v), c.inverse() * QRational::q_power(static_cast<int>(-t)));
}

QElem f_map(const MPoly& g) {
  QElem r(g.nvars());
  for (const auto& [e, c] : g.terms()) r.set(e, QRational(c));
  return r;
}

QElem f_map_mono(int n, const Exponent& v) { return QElem(n, v, QRational::one()); }

QElem scale_by_weights(const QElem& a, const std::vector<Weight>& var_weights, const Weight& h) {
  QElem r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    long s = 0;
    for (int i = 0; i < a.nvars(); ++i)
      if (e[i] != 0) s += e[i] * pair_weight(var_weights[i], h);
    r.set(e, c * QRational::q_power(static_cast<int>(s)));
  }
  return r;
}

}  // namespace cglq
