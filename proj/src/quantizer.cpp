#include "cglq/quantizer.hpp"

#include "cglq/io.hpp"

namespace cglq {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

}  // namespace

StepAudit prepend(OrePresentation& pres, const ExtensionSpec& spec, int k,
                  const QuantizeOptions& opts) {
  const int n = spec.n;
  StepAudit audit;
  audit.k = k;
  PrependData pre = make_prepend_data(spec, k);

  if (pre.is_zero()) {
    // Nothing to construct: all new relations are pure q-commutations.
    for (int j = k + 1; j < n; ++j) pres.set_rel_delta(k, j, QElem(n));
    return audit;
  }

  audit.trivial = false;
  CommAnalysis tail(spec, k + 1);
  QuantumAnalysis qtail(pres, tail, opts.max_peel);

  audit.comm_chain = compute_d_chain(tail, pre);
  audit.q_chain = compute_D_chain(qtail, audit.comm_chain, pre);
  audit.pivot = audit.comm_chain.pivot;
  audit.m = audit.comm_chain.m;
  audit.eta = pre.eta;
  audit.D = audit.q_chain.D[0];
  const QElem& D = audit.D;

  // Derivation of the adjoined generator: Delta(a) = D * a - sigma(a) * D in
  // the torus, pulled back to the ordered basis and checked against the
  // symmetric support, homogeneity, integrality, and semiclassical contracts.
  std::vector<Weight> var_weights(n, Weight(spec.r, 0));
  for (int j = k + 1; j < n; ++j) var_weights[j] = tail.y_weight(j);
  for (int j = k + 1; j < n; ++j) {
    const QElem& xj = qtail.embedded_generator(j);
    QElem sigma_xj = xj * QRational::q_power(static_cast<int>(pre.sigma_exp[j]));
    QElem delta_torus = qtail.torus().mul(D, xj) - qtail.torus().mul(sigma_xj, D);
    QElem delta_j;
    try {
      delta_j = qtail.torus_to_ore(delta_torus);
    } catch (const error& e) {
      fail(e.code(), "derivation of X" + idx(j) + " at step k=" + idx(k) +
                         " leaves the algebra: " + e.what());
    }
    if (!delta_j.is_zero()) {
      if (!delta_j.supported_in(k + 1, j - 1))
        fail(errc::support_violation, "derivation entry (" + idx(k) + "," + idx(j) +
                                          ") escapes the symmetric support window");
      if (!all_coeffs_in_L(delta_j))
        fail(errc::coefficient_not_in_l,
             "derivation entry (" + idx(k) + "," + idx(j) + ") is not integral over L");
      auto w = ore_weight(spec, delta_j);
      if (!w || *w != weight_add(spec.lambda[k], spec.lambda[j]))
        fail(errc::internal, "derivation entry (" + idx(k) + "," + idx(j) +
                                 ") is not homogeneous of weight lambda_k + lambda_j");
      // Semiclassical contract: Delta(X_j)/(q-1) at q=1 equals -delta_j(x_k).
      MPoly limit(n);
      for (const auto& [e, c] : delta_j.terms())
        limit.add(e, c.to_laurent().divide_by_q_minus_one().eval_at_one());
      if (limit != pre.delta[j])
        fail(errc::chain_identity_failed,
             "semiclassical limit of the derivation entry (" + idx(k) + "," + idx(j) +
                 ") does not match the bracket table");
    }
    pres.set_rel_delta(k, j, delta_j);
  }

  // Predicted update of the prime elements along the chain:
  //   Y'_{p^i} = X_k * Y_{p^i} + omega (1-omega)^{-1} Delta(Y_{p^i}).
  QRational omega = QRational::q_power(static_cast<int>(pre.eta));
  QRational shift = omega * (QRational::one() - omega).inverse();
  for (int i = 0; i <= audit.m; ++i) {
    int ji = tail.p_iter(audit.pivot, i);
    QElem Yj = qtail.Y(ji);
    QElem embedded = qtail.embed_to_torus(Yj);
    QElem sigma_Y = scale_by_weights(embedded, var_weights, spec.h_prime[k]);
    QElem delta_Y_torus = qtail.torus().mul(D, embedded) - qtail.torus().mul(sigma_Y, D);
    QElem delta_Y = qtail.torus_to_ore(delta_Y_torus);
    QElem predicted = pres.mul(pres.gen(k), Yj) + delta_Y * shift;
    audit.predicted_Y.emplace_back(ji, std::move(predicted));
  }

  return audit;
}

QuantumPresentation quantize(const ExtensionSpec& spec, const QuantizeOptions& opts) {
  ValidationReport rep = validate_spec(spec);
  if (!rep.ok()) {
    std::string bad;
    for (const auto& c : rep.checks)
      if (!c.pass) bad += (bad.empty() ? "" : "; ") + c.name + ": " + c.witness;
    fail(errc::validation_failed, bad);
  }

  QuantumPresentation out{spec, OrePresentation::from_spec(spec), {}};
  for (int k = spec.n - 2; k >= 0; --k) {
    StepAudit audit = prepend(out.pres, spec, k, opts);
    if (opts.audit_crosscheck && !audit.trivial) {
      // The freshly analyzed prime elements of the extended window must match
      // the one-step update identity.
      CommAnalysis comm(spec, k);
      QuantumAnalysis quantum(out.pres, comm, opts.max_peel);
      for (const auto& [j, predicted] : audit.predicted_Y) {
        if (quantum.Y(j) != predicted)
          fail(errc::chain_identity_failed,
               "one-step update of Y" + idx(j) + " disagrees with the direct recursion");
      }
    }
    out.steps.push_back(std::move(audit));
  }
  return out;
}

QuantumPresentation scaled_variant(const QuantumPresentation& qp, const QLaurent& epsilon) {
  if (epsilon.eval_at_one() != 1)
    fail(errc::bad_epsilon,
         "epsilon(1) = " + rational_str(epsilon.eval_at_one()) + ", expected 1");
  QuantumPresentation out = qp;
  QRational eps{epsilon};
  for (int j = 1; j < qp.spec.n; ++j) {
    const QElem& d = qp.pres.rel_delta(0, j);
    if (!d.is_zero()) out.pres.set_rel_delta(0, j, d * eps);
  }
  return out;
}

QRational recover_epsilon(const QuantumPresentation& base, const QuantumPresentation& variant) {
  std::optional<QRational> eps;
  for (int j = 1; j < base.spec.n; ++j) {
    const QElem& a = variant.pres.rel_delta(0, j);
    const QElem& b = base.pres.rel_delta(0, j);
    if (b.is_zero()) {
      if (!a.is_zero())
        fail(errc::cross_check_failed, "variant has a derivation entry the base lacks");
      continue;
    }
    auto ratio = scalar_ratio(a, b);
    if (!ratio) fail(errc::cross_check_failed, "derivation tables are not proportional");
    if (eps && *eps != *ratio)
      fail(errc::cross_check_failed, "derivation tables scale by different factors");
    eps = *ratio;
  }
  if (!eps) fail(errc::zero_input, "base presentation has no derivation entries to compare");
  return *eps;
}

}  // namespace cglq
