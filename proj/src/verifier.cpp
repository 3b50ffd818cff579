#include "cglq/verifier.hpp"

#include <random>

#include "cglq/io.hpp"

namespace cglq {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }

// Random element of the ordered basis with coefficients in L.
QElem random_ore(std::mt19937_64& rng, int n, int max_degree) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long> coefd(-3, 3);
  std::uniform_int_distribution<int> qd(-2, 2);
  std::uniform_int_distribution<int> expd(0, max_degree);
  QElem a(n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponent e(n, 0);
    int budget = max_degree;
    for (int v = 0; v < n && budget > 0; ++v) {
      int d = expd(rng) % (budget + 1);
      e[v] = d;
      budget -= d;
    }
    long c = coefd(rng);
    if (c == 0) c = 1;
    a.add(e, QRational::q_power(qd(rng), Rational(c)));
  }
  return a;
}

// (a*b - b*a)/(q-1) at q = 1; the commutator of an L-presentation is always
// divisible by q-1.
MPoly commutator_limit(const OrePresentation& pres, const QElem& a, const QElem& b) {
  QElem comm = pres.mul(a, b) - pres.mul(b, a);
  MPoly out(pres.n());
  for (const auto& [e, c] : comm.terms())
    out.add(e, c.to_laurent().divide_by_q_minus_one().eval_at_one());
  return out;
}

}  // namespace

CheckResult semiclassical_check(const ExtensionSpec& spec, const OrePresentation& pres,
                                const VerifyOptions& opts) {
  CheckResult res{"semiclassical", true, ""};
  try {
    for (int i = 0; i < spec.n && res.pass; ++i)
      for (int j = i + 1; j < spec.n; ++j) {
        MPoly got = commutator_limit(pres, pres.gen(i), pres.gen(j));
        MPoly want = bracket_gen(spec, i, j);
        if (got != want) {
          res.pass = false;
          res.witness = "generator pair (" + idx(i) + "," + idx(j) + "): limit " +
                        poly_str(got, 'x') + " vs bracket " + poly_str(want, 'x');
          break;
        }
      }
    std::mt19937_64 rng(opts.seed);
    for (int s = 0; s < opts.semiclassical_samples && res.pass; ++s) {
      QElem a = random_ore(rng, spec.n, opts.max_degree);
      QElem b = random_ore(rng, spec.n, opts.max_degree);
      MPoly got = commutator_limit(pres, a, b);
      MPoly want = bracket(spec, eval_at_one(a), eval_at_one(b));
      if (got != want) {
        res.pass = false;
        res.witness = "random pair #" + std::to_string(s) + ": " + elem_str(a, 'X') + " , " +
                      elem_str(b, 'X');
      }
    }
  } catch (const error& e) {
    res.pass = false;
    res.witness = e.what();
  }
  return res;
}

CheckResult y_congruence_check(const ExtensionSpec& spec, const OrePresentation& pres,
                               const VerifyOptions& opts) {
  CheckResult res{"y_congruence", true, ""};
  try {
    CommAnalysis comm(spec, 0);
    QuantumAnalysis qa(pres, comm, opts.max_peel);
    for (int j = 0; j < spec.n; ++j) {
      if (eval_at_one(qa.Y(j)) != comm.y(j)) {
        res.pass = false;
        res.witness = "Y" + idx(j) + " = " + elem_str(qa.Y(j), 'X') + " does not reduce to " +
                      poly_str(comm.y(j), 'x');
        return res;
      }
    }
  } catch (const error& e) {
    res.pass = false;
    res.witness = e.what();
  }
  return res;
}

CheckResult nilpotency_check(const OrePresentation& pres) {
  CheckResult res{"nilpotency", true, ""};
  const int n = pres.n();
  try {
    for (int j = 0; j < n && res.pass; ++j)
      for (int i = 0; i < j; ++i) {
        QElem a = pres.gen(i);
        // Each application must strictly raise the smallest variable involved,
        // so n steps are enough for any locally nilpotent table.
        int steps = 0;
        int last_min = i;
        while (!a.is_zero() && steps <= n) {
          a = pres.apply_delta(j, a);
          ++steps;
          if (a.is_zero()) break;
          int mv = a.min_var();
          if (mv <= last_min) {
            res.pass = false;
            res.witness = "Delta_" + idx(j) + " applied to X" + idx(i) +
                          " does not raise the minimal variable: " + elem_str(a, 'X');
            break;
          }
          last_min = mv;
        }
        if (res.pass && !a.is_zero()) {
          res.pass = false;
          res.witness = "Delta_" + idx(j) + " fails to annihilate X" + idx(i) + " after " +
                        std::to_string(steps) + " applications";
        }
        if (!res.pass) break;
      }
  } catch (const error& e) {
    res.pass = false;
    res.witness = e.what();
  }
  return res;
}

CheckResult distinguished_checks(const QuantumPresentation& qp, const VerifyOptions& opts) {
  CheckResult res{"distinguished", true, ""};
  const ExtensionSpec& spec = qp.spec;
  try {
    int nontrivial = 0;
    for (const auto& step : qp.steps) {
      if (step.trivial) continue;
      ++nontrivial;
      int k = step.k;
      CommAnalysis tail(spec, k + 1);
      PrependData pre = make_prepend_data(spec, k);

      // delta(d) = -eta d^2 with delta pushed to the Laurent algebra by Leibniz.
      const MPoly& d = step.comm_chain.d[0];
      MPoly lhs = delta_on_torus(tail, pre, d);
      MPoly rhs = mul(d, d) * Rational(-pre.eta);
      if (lhs != rhs) {
        res.pass = false;
        res.witness = "step k=" + idx(k) + ": delta(d) != -eta d^2";
        break;
      }

      // Delta(D) = (1 - omega) D^2 in the quantum torus, with sigma acting
      // through the monomial weights.
      QuantumAnalysis qtail(qp.pres, tail, opts.max_peel);
      std::vector<Weight> wts(spec.n, Weight(spec.r, 0));
      for (int j = k + 1; j < spec.n; ++j) wts[j] = tail.y_weight(j);
      const QElem& D = step.q_chain.D[0];
      QElem sigmaD = scale_by_weights(D, wts, spec.h_prime[k]);
      QElem qlhs = qtail.torus().mul(D, D) - qtail.torus().mul(sigmaD, D);
      QElem qrhs = qtail.torus().mul(D, D) *
                   (QRational::one() - QRational::q_power(static_cast<int>(pre.eta)));
      if (qlhs != qrhs) {
        res.pass = false;
        res.witness = "step k=" + idx(k) + ": Delta(D) != (1 - omega) D^2";
        break;
      }

      // Integrality along the chain: Y_{p^i} * D^{(i)} pulls back into the
      // algebra with coefficients in L.
      for (int i = 0; i <= step.q_chain.m; ++i) {
        QElem in_ore = chain_product_in_ore(qtail, step.q_chain, i);
        int ji = tail.p_iter(step.q_chain.pivot, i);
        if (!all_coeffs_in_L(in_ore) || in_ore.max_var() > ji) {
          res.pass = false;
          res.witness = "step k=" + idx(k) + ": chain product " + std::to_string(i) +
                        " is not integral in the expected subalgebra";
          break;
        }
      }
      if (!res.pass) break;
    }
    if (res.pass && nontrivial == 0) res.witness = "vacuous: no nontrivial steps";
  } catch (const error& e) {
    res.pass = false;
    res.witness = e.what();
  }
  return res;
}

CheckResult structure_checks(const ExtensionSpec& spec, const OrePresentation& pres,
                             const VerifyOptions& opts) {
  CheckResult res{"structure", true, ""};
  try {
    // Symmetric support and homogeneity of every relation tail; the two-sided
    // pairing on the exponents.
    for (int i = 0; i < spec.n && res.pass; ++i)
      for (int j = i + 1; j < spec.n; ++j) {
        if (spec.lambda_pair(i, j) != -pair_weight(spec.lambda[j], spec.h_prime[i])) {
          res.pass = false;
          res.witness = "two-sided exponent identity fails at (" + idx(i) + "," + idx(j) + ")";
          break;
        }
        const QElem& d = pres.rel_delta(i, j);
        if (d.is_zero()) continue;
        if (!d.supported_in(i + 1, j - 1)) {
          res.pass = false;
          res.witness = "relation tail (" + idx(i) + "," + idx(j) + ") escapes the support window";
          break;
        }
        auto w = ore_weight(spec, d);
        if (!w || *w != weight_add(spec.lambda[i], spec.lambda[j])) {
          res.pass = false;
          res.witness = "relation tail (" + idx(i) + "," + idx(j) + ") is not homogeneous";
          break;
        }
        if (!all_coeffs_in_L(d)) {
          res.pass = false;
          res.witness = "relation tail (" + idx(i) + "," + idx(j) + ") has a non-integral coefficient";
          break;
        }
      }
    if (!res.pass) return res;

    CommAnalysis comm(spec, 0);
    QuantumAnalysis qa(pres, comm, opts.max_peel);
    // Same level sets, same degree patterns, matching commutation matrices.
    for (int j = 0; j < spec.n; ++j) {
      if (qa.degree_pattern(j) != comm.degree_pattern(j)) {
        res.pass = false;
        res.witness = "degree patterns differ at " + idx(j);
        return res;
      }
    }
    for (int i = 0; i < spec.n; ++i)
      for (int j = 0; j < spec.n; ++j)
        if (qa.l_entry(i, j) != comm.kappa(i, j)) {
          res.pass = false;
          res.witness = "commutation matrix differs from the Poisson matrix at (" + idx(i) +
                        "," + idx(j) + ")";
          return res;
        }
    // Normality of chain maxima against all generators below the consumer.
    for (int j = 0; j < spec.n; ++j) {
      int consumer = spec.n;  // p^{-1}(j), when defined
      for (int l = j + 1; l < spec.n; ++l)
        if (comm.p(l) == j) consumer = l;
      for (int i = 0; i < consumer && i < spec.n; ++i) {
        if (i == j) continue;
        qa.normality_exponent(j, i);  // throws when not proportional
      }
    }
  } catch (const error& e) {
    res.pass = false;
    res.witness = e.what();
  }
  return res;
}

CheckResult engine_checks(const ExtensionSpec& spec, const OrePresentation& pres,
                          const VerifyOptions& opts) {
  CheckResult res{"engine", true, ""};
  try {
    std::mt19937_64 rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
    for (int s = 0; s < opts.assoc_triples && res.pass; ++s) {
      QElem a = random_ore(rng, spec.n, opts.max_degree);
      QElem b = random_ore(rng, spec.n, opts.max_degree);
      QElem c = random_ore(rng, spec.n, opts.max_degree);
      if (pres.mul(pres.mul(a, b), c) != pres.mul(a, pres.mul(b, c))) {
        res.pass = false;
        res.witness = "associativity fails on sample #" + std::to_string(s);
      }
    }
    if (!res.pass) return res;
    CommAnalysis comm(spec, 0);
    QuantumAnalysis qa(pres, comm, opts.max_peel);
    for (int s = 0; s < opts.roundtrip_samples; ++s) {
      QElem a = random_ore(rng, spec.n, opts.max_degree);
      if (qa.torus_to_ore(qa.embed_to_torus(a)) != a) {
        res.pass = false;
        res.witness = "embed/peel round trip fails on " + elem_str(a, 'X');
        break;
      }
    }
  } catch (const error& e) {
    res.pass = false;
    res.witness = e.what();
  }
  return res;
}

VerifyReport run_all_checks(const QuantumPresentation& qp, const VerifyOptions& opts) {
  VerifyReport rep;
  rep.seed = opts.seed;
  rep.checks.push_back(semiclassical_check(qp.spec, qp.pres, opts));
  rep.checks.push_back(y_congruence_check(qp.spec, qp.pres, opts));
  rep.checks.push_back(nilpotency_check(qp.pres));
  rep.checks.push_back(distinguished_checks(qp, opts));
  rep.checks.push_back(structure_checks(qp.spec, qp.pres, opts));
  rep.checks.push_back(engine_checks(qp.spec, qp.pres, opts));
  return rep;
}

}  // namespace cglq
