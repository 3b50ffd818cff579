#include "cglq/poisson.hpp"

namespace cglq {

MPoly bracket_gen(const ExtensionSpec& spec, int i, int j) {
  MPoly r(spec.n);
  if (i == j) return r;
  if (i > j) return -bracket_gen(spec, j, i);
  // {x_j, x_i} = lambda_{i,j} x_i x_j + delta_j(x_i)  for i < j, so flip the sign.
  Exponent e = exp_zero(spec.n);
  e[i] = 1;
  e[j] = 1;
  r.set(e, Rational(-spec.lambda_pair(i, j)));
  r -= spec.delta[j][i];
  return r;
}

MPoly partial(const MPoly& a, int i) {
  MPoly r(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    if (e[i] == 0) continue;
    Exponent f = e;
    f[i] -= 1;
    r.add(f, c * e[i]);
  }
  return r;
}

MPoly bracket(const ExtensionSpec& spec, const MPoly& a, const MPoly& b) {
  // The bracket is a biderivation, so it is determined by the generator table:
  // {a,b} = sum_{i<j} (da/dx_i db/dx_j - da/dx_j db/dx_i) {x_i,x_j}.
  MPoly r(spec.n);
  if (a.is_zero() || b.is_zero()) return r;
  int lo = std::min(a.min_var(), b.min_var());
  int hi = std::max(a.max_var(), b.max_var());
  if (lo < 0) return r;
  std::vector<MPoly> da(spec.n, MPoly(spec.n)), db(spec.n, MPoly(spec.n));
  for (int i = lo; i <= hi; ++i) {
    da[i] = partial(a, i);
    db[i] = partial(b, i);
  }
  for (int i = lo; i <= hi; ++i)
    for (int j = i + 1; j <= hi; ++j) {
      MPoly coef = mul(da[i], db[j]) - mul(da[j], db[i]);
      if (coef.is_zero()) continue;
      r += mul(coef, bracket_gen(spec, i, j));
    }
  return r;
}

std::optional<Weight> weight_of(const ExtensionSpec& spec, const MPoly& a) {
  if (a.is_zero()) fail(errc::zero_input, "weight of zero element");
  std::optional<Weight> w;
  for (const auto& [e, c] : a.terms()) {
    Weight we(spec.r, 0);
    for (int i = 0; i < spec.n; ++i)
      for (int t = 0; t < spec.r; ++t) we[t] += static_cast<long>(e[i]) * spec.lambda[i][t];
    if (!w)
      w = we;
    else if (*w != we)
      return std::nullopt;
  }
  return w;
}

MPoly diag_derivation(const ExtensionSpec& spec, const Weight& h, const MPoly& a) {
  MPoly r(spec.n);
  for (const auto& [e, c] : a.terms()) {
    long s = 0;
    for (int i = 0; i < spec.n; ++i)
      if (e[i] != 0) s += e[i] * pair_weight(spec.lambda[i], h);
    r.add(e, c * s);
  }
  return r;
}

MPoly theta_apply(const ExtensionSpec& spec, int j, const MPoly& a) {
  return diag_derivation(spec, spec.h[j], a);
}

MPoly derivation_apply(const std::vector<MPoly>& gen_values, const MPoly& a) {
  const int n = a.nvars();
  MPoly r(n);
  for (const auto& [e, c] : a.terms()) {
    for (int i = 0; i < n; ++i) {
      if (e[i] == 0 || gen_values[i].is_zero()) continue;
      Exponent f = e;
      f[i] -= 1;
      r += mul(MPoly(n, f, c * e[i]), gen_values[i]);
    }
  }
  return r;
}

MPoly delta_apply(const ExtensionSpec& spec, int j, const MPoly& a) {
  return derivation_apply(spec.delta[j], a);
}

}  // namespace cglq
