#include "cglq/quantum_analysis.hpp"

#include "cglq/io.hpp"

namespace cglq {

QuantumAnalysis::QuantumAnalysis(const OrePresentation& pres, const CommAnalysis& comm,
                                 long peel_cap)
    : pres_(&pres), comm_(&comm), peel_cap_(peel_cap) {
  const int n = pres.n();
  const ExtensionSpec& spec = comm.spec();
  Y_.assign(n, QElem(n));
  C_.assign(n, QElem(n));
  embed_x_.assign(n, QElem(n));

  // Prime elements, with the predecessor map inherited from the commutative
  // side. The quantum and commutative vanishing patterns must agree.
  for (int j = ws(); j < n; ++j) {
    bool delta_zero = true;
    for (int i = ws(); i < j; ++i)
      if (!pres.rel_delta(i, j).is_zero()) delta_zero = false;
    int p = comm.p(j);
    if ((p == -1) != delta_zero)
      fail(errc::pivot_mismatch, "derivation table at X" + std::to_string(j + 1) +
                                     " disagrees with the commutative predecessor map");
    if (p == -1) {
      Y_[j] = pres.gen(j);
      continue;
    }
    QElem dY = pres.apply_delta(j, pres.sigma_inv(j, Y_[p]));
    if (dY.is_zero())
      fail(errc::pivot_mismatch,
           "Delta_" + std::to_string(j + 1) + " kills the predecessor prime element");
    // Delta_j must vanish on every other prime surviving at the previous stage;
    // otherwise the quantum and commutative predecessor maps differ.
    for (int i = ws(); i < j; ++i) {
      if (i == p) continue;
      bool is_max = true;
      for (int l = ws(); l < j; ++l)
        if (comm.p(l) == i) is_max = false;
      if (!is_max) continue;
      if (!pres.apply_delta(j, Y_[i]).is_zero())
        fail(errc::pivot_mismatch, "Delta_" + std::to_string(j + 1) +
                                       " hits a second surviving prime element Y" +
                                       std::to_string(i + 1));
    }
    long eta_j = spec.eta(j);
    // (1 - omega_j)^{-1}, omega_j = q^{eta_j}
    QRational inv_one_minus_omega =
        (QRational::one() - QRational::q_power(static_cast<int>(eta_j))).inverse();
    C_[j] = -(dY * inv_one_minus_omega);
    Y_[j] = pres.mul(Y_[p], pres.gen(j)) - C_[j];
    if (!(Y_[j].leading_coeff() == QRational::one()))
      fail(errc::internal, "prime element Y" + std::to_string(j + 1) +
                               " does not have unit leading coefficient");
    auto w = ore_weight(spec, Y_[j]);
    if (!w || *w != comm.y_weight(j))
      fail(errc::internal, "Y" + std::to_string(j + 1) + " is not homogeneous of the right weight");
  }

  // q-commutation matrix: Y_i * Y_j = q^{l_ij} Y_j * Y_i with integer l_ij.
  std::vector<std::vector<long>> l(n, std::vector<long>(n, 0));
  for (int i = ws(); i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      QElem left = pres.mul(Y_[i], Y_[j]);
      QElem right = pres.mul(Y_[j], Y_[i]);
      auto ratio = scalar_ratio(left, right);
      if (!ratio)
        fail(errc::not_log_canonical, "Y" + std::to_string(i + 1) + " and Y" +
                                          std::to_string(j + 1) + " do not q-commute");
      QRational r = *ratio;
      if (!r.is_in_L() || !r.num().is_monomial() || r.num().leading_coeff() != 1)
        fail(errc::not_log_canonical, "non-integral q-commutation scalar " + r.str());
      l[i][j] = r.num().min_exp();
      l[j][i] = -l[i][j];
    }
  torus_ = QTorusPresentation(n, std::move(l));

  // Degree patterns and the triangular leading transform.
  T_.assign(n, std::vector<int>(n, 0));
  for (int j = 0; j < n; ++j) T_[j][j] = 1;
  for (int j = ws(); j < n; ++j) {
    Exponent f = Y_[j].degree();
    if (f != comm.degree_pattern(j))
      fail(errc::internal, "quantum and commutative degree patterns differ at " +
                               std::to_string(j + 1));
    for (int i = 0; i < n; ++i) T_[i][j] = f[i];
  }

  // X_j = Y_{p(j)}^{-1} * (Y_j + C_j) inside the torus.
  for (int j = ws(); j < n; ++j) {
    QElem num = torus_.mono(exp_unit(n, j)) + embed_to_torus(C_[j]);
    if (comm.p(j) == -1) {
      embed_x_[j] = num;
    } else {
      embed_x_[j] = torus_.mul(torus_.inv_mono(torus_.mono(exp_unit(n, comm.p(j)))), num);
    }
  }
}

QElem QuantumAnalysis::embed_mono(const Exponent& u) const {
  auto it = embed_memo_.find(u);
  if (it != embed_memo_.end()) return it->second;
  QElem r = QElem::constant(n(), QRational::one());
  for (int j = 0; j < n(); ++j)
    for (int t = 0; t < u[j]; ++t) r = torus_.mul(r, embed_x_[j]);
  embed_memo_.emplace(u, r);
  return r;
}

QElem QuantumAnalysis::embed_to_torus(const QElem& a) const {
  QElem r(n());
  for (const auto& [u, c] : a.terms()) {
    if (!exp_nonnegative(u)) fail(errc::internal, "embedding expects the ordered monomial basis");
    r += embed_mono(u) * c;
  }
  return r;
}

QElem QuantumAnalysis::torus_to_ore(const QElem& g) const {
  QElem rest = g;
  QElem result(n());
  long steps = 0;
  while (!rest.is_zero()) {
    if (++steps > peel_cap_)
      fail(errc::cap_exceeded, "conversion did not terminate within " +
                                   std::to_string(peel_cap_) + " peels");
    const Exponent& v = rest.degree();
    // u = T v must be a genuine multidegree for g to lie in the subalgebra.
    Exponent u(n(), 0);
    for (int i = 0; i < n(); ++i) {
      long s = 0;
      for (int j = 0; j < n(); ++j) s += static_cast<long>(T_[i][j]) * v[j];
      if (s < 0)
        fail(errc::not_in_subalgebra,
             "leading torus exponent does not come from the ordered basis");
      u[i] = static_cast<int>(s);
    }
    QElem img = embed_mono(u);
    QRational lead = img.coeff(v);
    if (lead.is_zero()) fail(errc::internal, "leading-exponent transform mismatch");
    QRational c = rest.coeff(v) / lead;
    result.add(u, c);
    rest -= img * c;
    if (!rest.is_zero() && compare_total_order(rest.degree(), v) >= 0)
      fail(errc::not_in_subalgebra, "peeling failed to reduce the leading exponent");
  }
  return result;
}

long QuantumAnalysis::normality_exponent(int j, int i) const {
  QElem left = pres_->mul(Y_[j], pres_->gen(i));
  QElem right = pres_->mul(pres_->gen(i), Y_[j]);
  auto ratio = scalar_ratio(left, right);
  if (!ratio || !ratio->is_in_L() || !ratio->num().is_monomial() ||
      ratio->num().leading_coeff() != 1)
    fail(errc::not_log_canonical, "Y" + std::to_string(j + 1) + " is not normal against X" +
                                      std::to_string(i + 1));
  return ratio->num().min_exp();
}

QElem compute_B(const QuantumAnalysis& qa, int k) {
  int p = qa.comm().p(k);
  if (p == -1) fail(errc::zero_input, "B is defined only when p(k) != 0");
  QElem ck = qa.embed_to_torus(qa.C(k));
  QElem bk(qa.n());
  for (const auto& [e, c] : ck.terms()) {
    if (e[p] < 0)
      fail(errc::not_a_monomial, "C" + std::to_string(k + 1) +
                                     " has a pole along its predecessor prime");
    if (e[p] == 0) bk.add(e, c);
  }
  if (bk.size() != 1)
    fail(errc::not_a_monomial, "constant part of C" + std::to_string(k + 1) +
                                   " is not a single monomial: " + elem_str(bk, 'Y'));
  return bk;
}

QDChain compute_D_chain(const QuantumAnalysis& qa, const CommDChain& comm_chain,
                        const PrependData& pre) {
  const int n = qa.n();
  const CommAnalysis& comm = qa.comm();
  const QTorusPresentation& torus = qa.torus();
  QDChain chain;
  chain.pivot = comm_chain.pivot;
  chain.m = comm_chain.m;
  chain.eta = comm_chain.eta;
  const int m = chain.m;

  chain.B.assign(std::max(0, m), QElem(n));
  for (int i = 0; i < m; ++i) chain.B[i] = compute_B(qa, comm.p_iter(chain.pivot, i));

  // Bottom element: the basis map applied to the commutative monomial d^{(m)}.
  chain.D.assign(m + 1, QElem(n));
  chain.D[m] = f_map(comm_chain.d[m]);
  if (!chain.D[m].is_monomial())
    fail(errc::chain_identity_failed, "bottom chain element is not a monomial");

  for (int i = m - 1; i >= 0; --i) {
    int ji = comm.p_iter(chain.pivot, i);
    QRational omega_ji = QRational::q_power(static_cast<int>(comm.spec().eta(ji)));
    QElem diff = chain.D[i + 1] - (i + 2 <= m ? chain.D[i + 2] : QElem(n));
    QElem correction = torus.mul(torus.inv_mono(torus.mono(exp_unit(n, ji))),
                                 torus.mul(chain.B[i], diff)) *
                       omega_ji;
    chain.D[i] = chain.D[i + 1] + correction;
  }

  // Each consecutive difference is a single torus monomial, and clearing the
  // two chain primes leaves a monomial with nonnegative exponents.
  chain.Mq.assign(m + 1, QElem(n));
  for (int i = 0; i <= m; ++i) {
    QElem gi = chain.D[i] - (i + 1 <= m ? chain.D[i + 1] : QElem(n));
    if (!gi.is_monomial())
      fail(errc::chain_identity_failed,
           "difference of consecutive quantum chain elements is not a monomial");
    int ji = comm.p_iter(chain.pivot, i);
    QElem clear = torus.mono(exp_unit(n, ji));
    if (i + 1 <= m)
      clear = torus.mul(torus.mono(exp_unit(n, comm.p_iter(chain.pivot, i + 1))), clear);
    QElem Mi = torus.mul(clear, gi);
    if (!Mi.is_monomial() || !Mi.is_polynomial())
      fail(errc::chain_identity_failed, "cleared quantum chain difference is not a monomial");
    chain.Mq[i] = Mi;
  }

  // Cross-check the recursion against the closed telescoping product form.
  QElem closed(n);
  for (int i = 0; i <= m; ++i) {
    QElem term = f_map(comm_chain.d[m]);
    for (int s = m - 1; s >= i; --s) {
      int js = comm.p_iter(chain.pivot, s);
      QRational omega_js = QRational::q_power(static_cast<int>(comm.spec().eta(js)));
      term = torus.mul(torus.mul(torus.inv_mono(torus.mono(exp_unit(n, js))), chain.B[s]) *
                           omega_js,
                       term);
    }
    closed += term;
  }
  if (closed != chain.D[0])
    fail(errc::chain_identity_failed,
         "recursive and closed forms of the distinguished element disagree");

  // Semiclassical congruence of the chain, term by term.
  for (int i = 0; i <= m; ++i) {
    MPoly lhs = eval_at_one(chain.D[i] - (i + 1 <= m ? chain.D[i + 1] : QElem(n)));
    MPoly rhs = comm_chain.d[i] - (i + 1 <= m ? comm_chain.d[i + 1] : MPoly(n));
    if (lhs != rhs)
      fail(errc::chain_identity_failed,
           "quantum chain does not reduce to the commutative chain at step " + std::to_string(i));
  }

  return chain;
}

QElem chain_product_in_ore(const QuantumAnalysis& qa, const QDChain& chain, int i) {
  int ji = qa.comm().p_iter(chain.pivot, i);
  QElem prod = qa.torus().mul(qa.torus().mono(exp_unit(qa.n(), ji)), chain.D[i]);
  return qa.torus_to_ore(prod);
}

}  // namespace cglq
