#include "cglq/comm_analysis.hpp"

#include <algorithm>

#include "cglq/io.hpp"

namespace cglq {

PrependData make_prepend_data(const ExtensionSpec& spec, int k) {
  PrependData pre;
  pre.k = k;
  pre.eta = spec.eta_prepend(k);
  pre.lambda0 = spec.lambda[k];
  pre.delta.assign(spec.n, MPoly(spec.n));
  pre.sigma_exp.assign(spec.n, 0);
  for (int j = k + 1; j < spec.n; ++j) {
    pre.delta[j] = -spec.delta[j][k];
    pre.sigma_exp[j] = spec.sigma_exp_prepend(k, j);
  }
  return pre;
}

CommAnalysis::CommAnalysis(const ExtensionSpec& spec, int ws) : spec_(&spec), ws_(ws) {
  const int n = spec.n;
  y_.assign(n, MPoly(n));
  c_.assign(n, MPoly(n));
  c_y_.assign(n, MPoly(n));
  embed_x_.assign(n, MPoly(n));
  p_.assign(n, -1);
  wty_.assign(n, Weight(spec.r, 0));

  // Prime element recursion y_j = y_{p(j)} x_j - delta_j(y_{p(j)}) / eta_j.
  for (int j = ws; j < n; ++j) {
    MPoly xj = MPoly::variable(n, j);
    if (spec.delta_col_zero(j, ws)) {
      p_[j] = -1;
      y_[j] = xj;
    } else {
      std::vector<int> candidates;
      for (int i = ws; i < j; ++i) {
        bool is_max = true;
        for (int l = ws; l < j; ++l)
          if (p_[l] == i) is_max = false;
        if (!is_max) continue;
        if (!delta_apply(spec, j, y_[i]).is_zero()) candidates.push_back(i);
      }
      if (candidates.size() != 1)
        fail(errc::ambiguous_pivot,
             std::to_string(candidates.size()) + " predecessor candidates for x" +
                 std::to_string(j + 1) + " (input is not a valid symmetric CGL extension)");
      p_[j] = candidates[0];
      c_[j] = delta_apply(spec, j, y_[p_[j]]) * Rational(1, spec.eta(j));
      y_[j] = mul(y_[p_[j]], xj) - c_[j];
    }
    auto w = weight_of(spec, y_[j]);
    if (!w)
      fail(errc::internal, "prime element y" + std::to_string(j + 1) + " is not homogeneous");
    wty_[j] = *w;
  }

  // Level sets: transitive chains of the predecessor map.
  std::vector<int> root(n, -1);
  for (int j = ws; j < n; ++j) {
    int i = j;
    while (p_[i] != -1) i = p_[i];
    root[j] = i;
  }
  for (int j = ws; j < n; ++j) {
    if (root[j] != j) continue;
    std::vector<int> chain;
    for (int l = ws; l < n; ++l)
      if (root[l] == j) chain.push_back(l);
    levels_.push_back(chain);
  }

  // Degree pattern: the multidegree of y_j has entry 1 exactly on the chain below j.
  for (int j = ws; j < n; ++j) {
    Exponent f = y_[j].degree();
    Exponent expect = exp_zero(n);
    for (int i = j; i != -1; i = p_[i]) expect[i] = 1;
    if (f != expect)
      fail(errc::internal, "degree pattern of y" + std::to_string(j + 1) + " is off");
  }

  // Generator substitution x_l = (y_l + c_l) / y_{p(l)} in the Laurent algebra.
  for (int l = ws; l < n; ++l) {
    c_y_[l] = embed(c_[l]);  // c_l lives on variables < l, already substituted
    MPoly num = MPoly(n, exp_unit(n, l), 1) + c_y_[l];
    if (p_[l] == -1) {
      embed_x_[l] = num;
    } else {
      embed_x_[l] = div_mono(num, exp_unit(n, p_[l]), 1);
    }
  }

  // Log-canonical matrix: {y_i, y_j} = kappa_{ij} y_i y_j.
  kappa_.assign(n, std::vector<long>(n, 0));
  for (int i = ws; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      MPoly br = bracket(spec, y_[i], y_[j]);
      auto ratio = scalar_ratio(br, mul(y_[i], y_[j]));
      if (!ratio)
        fail(errc::not_log_canonical,
             "{y" + std::to_string(i + 1) + ", y" + std::to_string(j + 1) +
                 "} is not a multiple of the product");
      if (ratio->get_den() != 1)
        fail(errc::not_log_canonical,
             "non-integer log-canonical scalar at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")");
      kappa_[i][j] = ratio->get_num().get_si();
      kappa_[j][i] = -kappa_[i][j];
    }
}

int CommAnalysis::p_iter(int j, int i) const {
  int v = j;
  for (int s = 0; s < i && v != -1; ++s) v = p_[v];
  return v;
}

bool CommAnalysis::is_chain_max(int j) const {
  for (int l = ws_; l < n(); ++l)
    if (p_[l] == j) return false;
  return true;
}

std::vector<int> CommAnalysis::surviving_primes(int j) const {
  std::vector<int> out;
  for (int i = ws_; i < j; ++i) {
    bool killed = false;
    for (int l = i + 1; l <= j; ++l)
      if (p_[l] == i) killed = true;
    if (!killed) out.push_back(i);
  }
  return out;
}

long CommAnalysis::lambda_y(const Exponent& v, const Exponent& w) const {
  long s = 0;
  for (int i = 0; i < n(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < n(); ++j) {
      if (w[j] == 0) continue;
      s += static_cast<long>(v[i]) * w[j] * kappa_[i][j];
    }
  }
  return s;
}

MPoly CommAnalysis::embed(const MPoly& a) const {
  MPoly r(n());
  for (const auto& [e, c] : a.terms()) {
    MPoly term = MPoly::constant(n(), c);
    for (int l = 0; l < n(); ++l)
      for (int t = 0; t < e[l]; ++t) term = mul(term, embed_x_[l]);
    r += term;
  }
  return r;
}

std::optional<Weight> CommAnalysis::laurent_weight(const MPoly& g) const {
  if (g.is_zero()) fail(errc::zero_input, "weight of zero element");
  std::optional<Weight> w;
  for (const auto& [e, c] : g.terms()) {
    Weight we(spec_->r, 0);
    for (int i = 0; i < n(); ++i)
      if (e[i] != 0)
        for (int t = 0; t < spec_->r; ++t) we[t] += static_cast<long>(e[i]) * wty_[i][t];
    if (!w)
      w = we;
    else if (*w != we)
      return std::nullopt;
  }
  return w;
}

MPoly CommAnalysis::b(int k) const {
  if (p_[k] == -1) fail(errc::zero_input, "b is defined only when p(k) != 0");
  const MPoly& ck = c_y_[k];
  MPoly bk(n());
  for (const auto& [e, c] : ck.terms()) {
    if (e[p_[k]] < 0)
      fail(errc::not_a_monomial,
           "c" + std::to_string(k + 1) + " has a pole along its predecessor prime");
    if (e[p_[k]] == 0) bk.add(e, c);
  }
  if (bk.size() != 1)
    fail(errc::not_a_monomial, "constant part of c" + std::to_string(k + 1) +
                                   " is not a single monomial: " + poly_str(bk, 'y'));
  // Characterization: b_k ~ y^v where y^v has the weight of y_k and
  // Lambda_Y(v, e_l) matches row k of kappa, shifted by eta at l = p(k).
  const Exponent& v = bk.degree();
  auto wv = laurent_weight(bk);
  if (!wv || *wv != wty_[k])
    fail(errc::cross_check_failed, "b" + std::to_string(k + 1) + " has the wrong weight");
  for (int l = ws_; l < k; ++l) {
    long expect = kappa_[k][l] + (l == p_[k] ? spec_->eta(k) : 0);
    if (lambda_y(v, exp_unit(n(), l)) != expect)
      fail(errc::cross_check_failed, "b" + std::to_string(k + 1) +
                                         " bracket characterization fails at l=" +
                                         std::to_string(l + 1));
  }
  return bk;
}

MPoly torus_bracket(const CommAnalysis& an, const MPoly& a, const MPoly& b) {
  MPoly r(an.n());
  for (const auto& [v, cv] : a.terms())
    for (const auto& [w, cw] : b.terms()) {
      long s = an.lambda_y(v, w);
      if (s != 0) r.add(exp_add(v, w), cv * cw * s);
    }
  return r;
}

MPoly delta_on_torus(const CommAnalysis& an, const PrependData& pre, const MPoly& g) {
  // Leibniz over Laurent monomials; delta(y_j) computed in x-coordinates and embedded.
  const int n = an.n();
  std::vector<MPoly> dy(n, MPoly(n));
  for (int j = an.ws(); j < n; ++j) dy[j] = an.embed(derivation_apply(pre.delta, an.y(j)));
  MPoly r(n);
  for (const auto& [e, c] : g.terms()) {
    for (int j = an.ws(); j < n; ++j) {
      if (e[j] == 0 || dy[j].is_zero()) continue;
      Exponent f = e;
      f[j] -= 1;
      r += mul(MPoly(n, f, c * e[j]), dy[j]);
    }
  }
  return r;
}

MPoly theta_on_torus(const CommAnalysis& an, const PrependData& pre, const MPoly& g) {
  MPoly r(an.n());
  for (const auto& [e, c] : g.terms()) {
    long s = 0;
    for (int j = an.ws(); j < an.n(); ++j)
      if (e[j] != 0) s += e[j] * pair_weight(an.y_weight(j), an.spec().h_prime[pre.k]);
    r.add(e, c * s);
  }
  return r;
}

CommDChain compute_d_chain(const CommAnalysis& an, const PrependData& pre) {
  const int n = an.n();
  if (pre.is_zero()) fail(errc::zero_input, "d-chain of a zero derivation");
  if (pre.eta == 0) fail(errc::zero_input, "prepend pairing eta must be nonzero");

  std::vector<MPoly> dy(n, MPoly(n));
  for (int j = an.ws(); j < n; ++j) dy[j] = derivation_apply(pre.delta, an.y(j));

  // The unique chain maximum whose prime element is hit by delta.
  std::vector<int> hits;
  for (int j = an.ws(); j < n; ++j)
    if (an.is_chain_max(j) && !dy[j].is_zero()) hits.push_back(j);
  if (hits.empty()) fail(errc::no_pivot, "delta vanishes on every chain maximum");
  if (hits.size() > 1)
    fail(errc::multiple_pivots, "delta hits " + std::to_string(hits.size()) + " chain maxima");

  CommDChain chain;
  chain.pivot = hits[0];
  chain.eta = pre.eta;
  chain.m = 0;
  while (an.p_iter(chain.pivot, chain.m + 1) != -1) ++chain.m;

  // Vanishing pattern: delta hits exactly the chain through the pivot.
  for (int j = an.ws(); j < n; ++j) {
    bool in_chain = false;
    for (int i = 0; i <= chain.m; ++i)
      if (an.p_iter(chain.pivot, i) == j) in_chain = true;
    if (dy[j].is_zero() == in_chain)
      fail(errc::chain_identity_failed,
           "delta vanishing pattern breaks at y" + std::to_string(j + 1));
  }

  chain.d.assign(chain.m + 1, MPoly(n));
  for (int i = 0; i <= chain.m; ++i) {
    int ji = an.p_iter(chain.pivot, i);
    MPoly num = an.embed(dy[ji]);
    chain.d[i] = div_mono(num, exp_unit(n, ji), Rational(pre.eta));
  }

  // M^{(i)} = (d^{(i)} - d^{(i+1)}) y_{p^i} y_{p^{i+1}}; a single monomial with
  // nonnegative exponents, nonzero all along the chain.
  chain.M.assign(chain.m + 1, MPoly(n));
  for (int i = 0; i <= chain.m; ++i) {
    MPoly gi = chain.d[i] - (i + 1 <= chain.m ? chain.d[i + 1] : MPoly(n));
    Exponent shift = exp_unit(n, an.p_iter(chain.pivot, i));
    if (i + 1 <= chain.m) shift = exp_add(shift, exp_unit(n, an.p_iter(chain.pivot, i + 1)));
    MPoly Mi(n);
    for (const auto& [e, c] : gi.terms()) Mi.add(exp_add(e, shift), c);
    if (Mi.size() != 1 || !Mi.is_polynomial())
      fail(errc::chain_identity_failed,
           "difference of consecutive chain elements is not a unit monomial at step " +
               std::to_string(i));
    chain.M[i] = Mi;
  }

  // Telescoping recursion between consecutive differences.
  for (int i = 0; i + 1 <= chain.m; ++i) {
    int ji = an.p_iter(chain.pivot, i);
    MPoly lhs = chain.d[i] - chain.d[i + 1];
    MPoly gnext = chain.d[i + 1] - (i + 2 <= chain.m ? chain.d[i + 2] : MPoly(n));
    MPoly rhs = mul(div_mono(an.b(ji), exp_unit(n, ji), 1), gnext);
    if (lhs != rhs)
      fail(errc::chain_identity_failed, "chain recursion fails at step " + std::to_string(i));
  }

  return chain;
}

}  // namespace cglq
