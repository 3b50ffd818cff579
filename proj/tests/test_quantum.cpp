#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cglq/io.hpp"
#include "cglq/quantum_analysis.hpp"

using namespace cglq;

namespace {

OrePresentation weyl3_pres() {
  OrePresentation pres(3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  pres.set_rel_delta(0, 2, parse_element("(1 - q^2)/2*X2^2", 3, 'X'));
  return pres;
}

OrePresentation chain3_pres() {
  OrePresentation pres(3, {{0, 1, -1}, {0, 0, 1}, {0, 0, 0}});
  pres.set_rel_delta(0, 1, parse_element("q^-1 - 1", 3, 'X'));
  pres.set_rel_delta(1, 2, parse_element("q^-1 - 1", 3, 'X'));
  return pres;
}

QElem X(const std::string& s, int n) { return parse_element(s, n, 'X'); }
QElem Y(const std::string& s, int n) { return parse_element(s, n, 'Y'); }

QElem random_ore(std::mt19937_64& rng, int n, int lo_var, int max_deg = 3) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long> coefd(-3, 3);
  std::uniform_int_distribution<int> qd(-1, 1);
  std::uniform_int_distribution<int> expd(0, max_deg);
  QElem a(n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponent e(n, 0);
    int budget = max_deg;
    for (int v = lo_var; v < n && budget > 0; ++v) {
      int d = expd(rng) % (budget + 1);
      e[v] = d;
      budget -= d;
    }
    a.add(e, QRational::q_power(qd(rng), Rational(coefd(rng))));
  }
  return a;
}

}  // namespace

TEST_CASE("weyl3 quantum prime elements") {
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = weyl3_pres();
  QuantumAnalysis qa(pres, comm);
  CHECK(qa.Y(0) == X("X1", 3));
  CHECK(qa.Y(1) == X("X2", 3));
  CHECK(qa.Y(2) == X("X1*X3 - 1/2*X2^2", 3));
  CHECK(qa.C(2) == X("1/2*X2^2", 3));
  CHECK(qa.l_entry(0, 1) == -1);
  CHECK(qa.l_entry(0, 2) == 0);
  CHECK(qa.l_entry(1, 2) == 0);
}

TEST_CASE("quantum plane prime elements") {
  ExtensionSpec spec = fixture_spec("quantum-plane");
  CommAnalysis comm(spec, 0);
  OrePresentation pres(2, {{0, 1}, {0, 0}});
  QuantumAnalysis qa(pres, comm);
  CHECK(qa.Y(0) == X("X1", 2));
  CHECK(qa.Y(1) == X("X2", 2));
  CHECK(qa.l_entry(0, 1) == -1);
}

TEST_CASE("chain3 quantum prime elements") {
  ExtensionSpec spec = fixture_spec("chain3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = chain3_pres();
  QuantumAnalysis qa(pres, comm);
  CHECK(qa.Y(1) == X("X1*X2 + 1", 3));
  CHECK(qa.Y(2) == X("X1*X2*X3 + X3 + X1", 3));
  CHECK(qa.l_entry(0, 1) == -1);
  CHECK(qa.l_entry(0, 2) == 0);
  CHECK(qa.l_entry(1, 2) == 0);
}

TEST_CASE("l matrix equals the poisson matrix on all fixtures") {
  // Delta-free fixtures get their presentations straight from the spec.
  for (const char* name : {"quantum-plane"}) {
    ExtensionSpec spec = fixture_spec(name);
    CommAnalysis comm(spec, 0);
    OrePresentation pres = OrePresentation::from_spec(spec);
    QuantumAnalysis qa(pres, comm);
    for (int i = 0; i < spec.n; ++i)
      for (int j = 0; j < spec.n; ++j) CHECK(qa.l_entry(i, j) == comm.kappa(i, j));
  }
  {
    ExtensionSpec spec = fixture_spec("weyl3");
    CommAnalysis comm(spec, 0);
    OrePresentation pres = weyl3_pres();
    QuantumAnalysis qa(pres, comm);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(qa.l_entry(i, j) == comm.kappa(i, j));
  }
}

TEST_CASE("semiclassical congruence of prime elements") {
  ExtensionSpec spec = fixture_spec("chain3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = chain3_pres();
  QuantumAnalysis qa(pres, comm);
  for (int j = 0; j < 3; ++j) CHECK(eval_at_one(qa.Y(j)) == comm.y(j));
}

TEST_CASE("pivot mismatch on an inconsistent presentation") {
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis comm(spec, 0);
  // Presentation with a zero table where the spec has a derivation.
  OrePresentation pres(3, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  try {
    QuantumAnalysis qa(pres, comm);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::pivot_mismatch);
  }
}

TEST_CASE("torus embedding of generators") {
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = weyl3_pres();
  QuantumAnalysis qa(pres, comm);
  CHECK(qa.embedded_generator(0) == Y("Y1", 3));
  CHECK(qa.embedded_generator(1) == Y("Y2", 3));
  // X3 = Y1^-1 (Y3 + 1/2 Y2^2); Y1 commutes with both, so ordering is plain.
  CHECK(qa.embedded_generator(2) == Y("Y1^-1*Y3 + 1/2*Y1^-1*Y2^2", 3));
  // The embedded prime elements are the torus generators.
  for (int j = 0; j < 3; ++j)
    CHECK(qa.embed_to_torus(qa.Y(j)) == qa.torus().mono(exp_unit(3, j)));
}

TEST_CASE("embedding is multiplicative") {
  std::mt19937_64 rng(71);
  ExtensionSpec spec = fixture_spec("chain3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = chain3_pres();
  QuantumAnalysis qa(pres, comm);
  for (int rep = 0; rep < 30; ++rep) {
    QElem a = random_ore(rng, 3, 0), b = random_ore(rng, 3, 0);
    CHECK(qa.embed_to_torus(pres.mul(a, b)) ==
          qa.torus().mul(qa.embed_to_torus(a), qa.embed_to_torus(b)));
  }
}

TEST_CASE("leading exponents transform linearly") {
  std::mt19937_64 rng(73);
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = weyl3_pres();
  QuantumAnalysis qa(pres, comm);
  const auto& T = qa.leading_transform();
  std::uniform_int_distribution<int> expd(0, 3);
  for (int rep = 0; rep < 50; ++rep) {
    Exponent u = {expd(rng), expd(rng), expd(rng)};
    QElem img = qa.embed_mono(u);
    Exponent v = img.degree();
    Exponent tu(3, 0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) tu[i] += T[i][j] * v[j];
    CHECK(tu == u);
  }
}

TEST_CASE("peeling inverts the embedding") {
  std::mt19937_64 rng(79);
  for (int which = 0; which < 2; ++which) {
    ExtensionSpec spec = fixture_spec(which == 0 ? "weyl3" : "chain3");
    CommAnalysis comm(spec, 0);
    OrePresentation pres = which == 0 ? weyl3_pres() : chain3_pres();
    QuantumAnalysis qa(pres, comm);
    for (int rep = 0; rep < 50; ++rep) {
      QElem a = random_ore(rng, 3, 0);
      CHECK(qa.torus_to_ore(qa.embed_to_torus(a)) == a);
    }
  }
}

TEST_CASE("peeling detects elements outside the subalgebra") {
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = weyl3_pres();
  QuantumAnalysis qa(pres, comm);
  CHECK(qa.torus_to_ore(Y("Y2^2", 3)) == X("X2^2", 3));
  CHECK(qa.torus_to_ore(Y("(1 - q^2)/2*Y2^2", 3)) == X("(1 - q^2)/2*X2^2", 3));
  try {
    qa.torus_to_ore(Y("Y1^-1", 3));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::not_in_subalgebra);
  }
}

TEST_CASE("peel cap is enforced") {
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis comm(spec, 0);
  OrePresentation pres = weyl3_pres();
  QuantumAnalysis qa(pres, comm, 2);
  QElem big = X("X1*X3 + X2^2 + X1 + X2 + 1", 3);
  try {
    qa.torus_to_ore(qa.embed_to_torus(big));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::cap_exceeded);
  }
}

TEST_CASE("normality exponents") {
  {
    ExtensionSpec spec = fixture_spec("quantum-plane");
    CommAnalysis comm(spec, 0);
    OrePresentation pres(2, {{0, 1}, {0, 0}});
    QuantumAnalysis qa(pres, comm);
    // Y1*X2 = q^{-1} X2*Y1 and Y2*X1 = q X1*Y2.
    CHECK(qa.normality_exponent(0, 1) == -1);
    CHECK(qa.normality_exponent(1, 0) == 1);
  }
  {
    ExtensionSpec spec = fixture_spec("weyl3");
    CommAnalysis comm(spec, 0);
    OrePresentation pres = weyl3_pres();
    QuantumAnalysis qa(pres, comm);
    // Y3 commutes with X2 exactly (the derivation tail cancels the twist).
    CHECK(qa.normality_exponent(2, 1) == 0);
    CHECK(qa.normality_exponent(2, 0) == 0);
    CHECK(qa.normality_exponent(0, 1) == -1);
  }
}

TEST_CASE("constant monomials B_k and their semiclassical limits") {
  {
    ExtensionSpec spec = fixture_spec("weyl3");
    CommAnalysis comm(spec, 0);
    OrePresentation pres = weyl3_pres();
    QuantumAnalysis qa(pres, comm);
    QElem B3 = compute_B(qa, 2);
    CHECK(B3 == Y("1/2*Y2^2", 3));
    CHECK(eval_at_one(B3) == comm.b(2));
  }
  {
    ExtensionSpec spec = fixture_spec("chain3");
    CommAnalysis comm(spec, 0);
    OrePresentation pres = chain3_pres();
    QuantumAnalysis qa(pres, comm);
    CHECK(eval_at_one(compute_B(qa, 1)) == comm.b(1));
    CHECK(eval_at_one(compute_B(qa, 2)) == comm.b(2));
  }
}

TEST_CASE("weyl3 distinguished chain (m = 0)") {
  ExtensionSpec spec = fixture_spec("weyl3");
  CommAnalysis tail(spec, 1);
  PrependData pre = make_prepend_data(spec, 0);
  CommDChain cchain = compute_d_chain(tail, pre);

  OrePresentation pres = weyl3_pres();
  QuantumAnalysis qtail(pres, tail);
  QDChain qchain = compute_D_chain(qtail, cchain, pre);
  CHECK(qchain.m == 0);
  CHECK(qchain.D[0] == Y("1/2*Y2^2*Y3^-1", 3));

  // Y_pivot * D converts back with L coefficients.
  QElem in_ore = chain_product_in_ore(qtail, qchain, 0);
  CHECK(in_ore == X("1/2*q^2*X2^2", 3));
  CHECK(all_coeffs_in_L(in_ore));
}

TEST_CASE("chain3 distinguished chain (m = 1)") {
  ExtensionSpec spec = fixture_spec("chain3");
  CommAnalysis tail(spec, 1);
  PrependData pre = make_prepend_data(spec, 0);
  CommDChain cchain = compute_d_chain(tail, pre);

  OrePresentation pres = chain3_pres();
  QuantumAnalysis qtail(pres, tail);
  QDChain qchain = compute_D_chain(qtail, cchain, pre);
  CHECK(qchain.m == 1);
  CHECK(qchain.D[1] == Y("-Y2^-1", 3));
  CHECK(qchain.D[0] == Y("Y2^-1*Y3^-1 - Y2^-1", 3));
  // The recursion at i = 0 instantiates with D2 = 0:
  QElem diff = qchain.D[1];
  QRational omega3 = QRational::q_power(-1);  // eta_3 = -1
  QElem rhs = qchain.D[1] + qtail.torus().mul(qtail.torus().inv_mono(qtail.torus().mono(
                                                  exp_unit(3, 2))),
                                              qtail.torus().mul(qchain.B[0], diff)) *
                                omega3;
  CHECK(qchain.D[0] == rhs);
  for (int i = 0; i <= 1; ++i) {
    QElem in_ore = chain_product_in_ore(qtail, qchain, i);
    CHECK(all_coeffs_in_L(in_ore));
  }
}

TEST_CASE("distinguished identity in the quantum torus") {
  // Delta(D) = (1 - omega) D^2 with Delta(r) = D r - sigma(r) D.
  for (int which = 0; which < 2; ++which) {
    ExtensionSpec spec = fixture_spec(which == 0 ? "weyl3" : "chain3");
    CommAnalysis tail(spec, 1);
    PrependData pre = make_prepend_data(spec, 0);
    CommDChain cchain = compute_d_chain(tail, pre);
    OrePresentation pres = which == 0 ? weyl3_pres() : chain3_pres();
    QuantumAnalysis qtail(pres, tail);
    QDChain qchain = compute_D_chain(qtail, cchain, pre);
    const QElem& D = qchain.D[0];

    std::vector<Weight> wts(3, Weight(spec.r, 0));
    for (int j = 1; j < 3; ++j) wts[j] = tail.y_weight(j);
    QElem sigmaD = scale_by_weights(D, wts, spec.h_prime[0]);
    QElem lhs = qtail.torus().mul(D, D) - qtail.torus().mul(sigmaD, D);
    QElem rhs = qtail.torus().mul(D, D) *
                (QRational::one() - QRational::q_power(static_cast<int>(pre.eta)));
    CHECK(lhs == rhs);
  }
}
