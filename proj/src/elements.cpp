#include "cglq/elements.hpp"

namespace cglq {

MPoly mul(const MPoly& a, const MPoly& b) {
  if (a.nvars() != b.nvars()) fail(errc::length_mismatch, "product over mismatched variable sets");
  MPoly r(a.nvars());
  if (a.is_zero() || b.is_zero()) return r;
  kernels::CommMap out;
  kernels::product_comm(a.term_list(), b.term_list(), out);
  for (auto& [e, c] : out) r.set(e, c);
  return r;
}

MPoly pow(const MPoly& a, int e) {
  MPoly r = MPoly::constant(a.nvars(), 1);
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

MPoly eval_at_one(const QElem& a) {
  MPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) r.add(e, c.eval_at_one());
  return r;
}

QElem lift(const MPoly& a) {
  QElem r(a.nvars());
  for (const auto& [e, c] : a.terms()) r.set(e, QRational(c));
  return r;
}

bool all_coeffs_in_L(const QElem& a) {
  for (const auto& [e, c] : a.terms())
    if (!c.is_in_L()) return false;
  return true;
}

MPoly div_mono(const MPoly& a, const Exponent& e, const Rational& c) {
  if (c == 0) fail(errc::zero_input, "division by zero monomial");
  MPoly r(a.nvars());
  for (const auto& [ea, ca] : a.terms()) r.set(exp_sub(ea, e), ca / c);
  return r;
}

std::optional<Rational> scalar_ratio(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(Rational(0)) : std::nullopt;
  if (a.is_zero()) return Rational(0);
  Rational c = a.leading_coeff() / b.leading_coeff();
  if (a == b * c) return c;
  return std::nullopt;
}

std::optional<QRational> scalar_ratio(const QElem& a, const QElem& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<QRational>(QRational(0)) : std::nullopt;
  if (a.is_zero()) return QRational(0);
  QRational c = a.leading_coeff() / b.leading_coeff();
  if (a == b * c) return c;
  return std::nullopt;
}

}  // namespace cglq
