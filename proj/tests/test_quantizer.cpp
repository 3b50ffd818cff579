#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cglq/io.hpp"
#include "cglq/quantizer.hpp"

using namespace cglq;

namespace {

QElem X(const std::string& s, int n) { return parse_element(s, n, 'X'); }

}  // namespace

TEST_CASE("quantum plane quantizes to a single q-commutation") {
  QuantumPresentation qp = quantize(fixture_spec("quantum-plane"));
  CHECK(qp.pres.lambda(0, 1) == 1);
  CHECK(qp.delta_rel(0, 1).is_zero());
  REQUIRE(qp.steps.size() == 1);
  CHECK(qp.steps[0].trivial);
}

TEST_CASE("weyl3 golden presentation") {
  QuantumPresentation qp = quantize(fixture_spec("weyl3"));
  // X1*X2 = q^-1 X2*X1, X2*X3 = q^-1 X3*X2, X1*X3 = X3*X1 + (1-q^2)/2 X2^2
  CHECK(qp.pres.lambda(0, 1) == 1);
  CHECK(qp.pres.lambda(1, 2) == 1);
  CHECK(qp.pres.lambda(0, 2) == 0);
  CHECK(qp.delta_rel(0, 1).is_zero());
  CHECK(qp.delta_rel(1, 2).is_zero());
  CHECK(qp.delta_rel(0, 2) == X("(1 - q^2)/2*X2^2", 3));

  // Audit of the only nontrivial step.
  const StepAudit& step = qp.steps.back();
  CHECK(step.k == 0);
  CHECK_FALSE(step.trivial);
  CHECK(step.pivot == 2);
  CHECK(step.m == 0);
  CHECK(step.eta == -2);
  CHECK(step.D == parse_element("1/2*Y2^2*Y3^-1", 3, 'Y'));

  CommAnalysis comm(qp.spec, 0);
  QuantumAnalysis qa(qp.pres, comm);
  CHECK(qa.Y(2) == X("X1*X3 - 1/2*X2^2", 3));
}

TEST_CASE("chain3 golden presentation") {
  QuantumPresentation qp = quantize(fixture_spec("chain3"));
  CHECK(qp.pres.lambda(0, 1) == 1);
  CHECK(qp.pres.lambda(0, 2) == -1);
  CHECK(qp.pres.lambda(1, 2) == 1);
  CHECK(qp.delta_rel(0, 1) == X("q^-1 - 1", 3));
  CHECK(qp.delta_rel(1, 2) == X("q^-1 - 1", 3));
  CHECK(qp.delta_rel(0, 2).is_zero());

  const StepAudit& step = qp.steps.back();
  CHECK(step.k == 0);
  CHECK(step.pivot == 2);
  CHECK(step.m == 1);
  CHECK(step.eta == 1);
  CHECK(step.D == parse_element("Y2^-1*Y3^-1 - Y2^-1", 3, 'Y'));

  CommAnalysis comm(qp.spec, 0);
  QuantumAnalysis qa(qp.pres, comm);
  CHECK(qa.Y(1) == X("X1*X2 + 1", 3));
  CHECK(qa.Y(2) == X("X1*X2*X3 + X3 + X1", 3));
}

TEST_CASE("m2x2 golden presentation") {
  QuantumPresentation qp = quantize(fixture_spec("m2x2"));
  CHECK(qp.pres.lambda(0, 1) == -1);
  CHECK(qp.pres.lambda(0, 2) == -1);
  CHECK(qp.pres.lambda(1, 2) == 0);
  CHECK(qp.pres.lambda(1, 3) == -1);
  CHECK(qp.pres.lambda(2, 3) == -1);
  CHECK(qp.pres.lambda(0, 3) == 0);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (i == 0 && j == 3) continue;
      CHECK(qp.delta_rel(i, j).is_zero());
    }
  CHECK(qp.delta_rel(0, 3) == X("(1 - q^-2)*X2*X3", 4));

  // c(q) = 1 - q^-2 satisfies c(q)/(q-1) -> 2 at q = 1.
  QRational c = qp.delta_rel(0, 3).leading_coeff();
  CHECK(c.to_laurent().divide_by_q_minus_one().eval_at_one() == 2);

  CommAnalysis comm(qp.spec, 0);
  QuantumAnalysis qa(qp.pres, comm);
  CHECK(qa.Y(3) == X("X1*X4 - X2*X3", 4));
}

TEST_CASE("quantization is deterministic") {
  QuantumPresentation a = quantize(fixture_spec("weyl3"));
  QuantumPresentation b = quantize(fixture_spec("weyl3"));
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CHECK(a.delta_rel(i, j) == b.delta_rel(i, j));
      CHECK(elem_str(a.delta_rel(i, j), 'X') == elem_str(b.delta_rel(i, j), 'X'));
    }
}

TEST_CASE("a fully commutative-twist spec quantizes with zero tables") {
  // All off-diagonal pairings zero, eta_j = 1.
  ExtensionSpec spec;
  spec.n = 3;
  spec.r = 3;
  spec.lambda = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  spec.h = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  spec.h_prime = spec.h;
  spec.delta.assign(3, std::vector<MPoly>(3, MPoly(3)));
  REQUIRE(validate_spec(spec).ok());
  QuantumPresentation qp = quantize(spec);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      CHECK(qp.pres.lambda(i, j) == 0);
      CHECK(qp.delta_rel(i, j).is_zero());
    }
}

TEST_CASE("quantize rejects invalid specs") {
  ExtensionSpec spec = fixture_spec("weyl3");
  spec.h[2] = {0, 0};
  try {
    quantize(spec);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::validation_failed);
  }
}

TEST_CASE("scaled variants") {
  QuantumPresentation qp = quantize(fixture_spec("weyl3"));

  QuantumPresentation same = scaled_variant(qp, parse_qlaurent("1"));
  CHECK(same.delta_rel(0, 2) == qp.delta_rel(0, 2));

  QuantumPresentation v = scaled_variant(qp, parse_qlaurent("q"));
  CHECK(v.delta_rel(0, 2) == X("q*(1 - q^2)/2*X2^2", 3));
  // Unchanged semiclassical limit of the relation tail.
  QElem tail = v.delta_rel(0, 2);
  MPoly limit(3);
  for (const auto& [e, c] : tail.terms())
    limit.add(e, c.to_laurent().divide_by_q_minus_one().eval_at_one());
  CHECK(limit == parse_poly("-x2^2", 3, 'x'));

  QRational eps = recover_epsilon(qp, v);
  CHECK(eps == parse_qrational("q"));
  CHECK(eps.is_in_L());
  CHECK(eps.eval_at_one() == 1);

  try {
    scaled_variant(qp, parse_qlaurent("q + 1"));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::bad_epsilon);
  }
}

TEST_CASE("prepend of the middle weyl3 generator is trivial") {
  ExtensionSpec spec = fixture_spec("weyl3");
  OrePresentation pres = OrePresentation::from_spec(spec);
  QuantizeOptions opts;
  StepAudit audit = prepend(pres, spec, 1, opts);
  CHECK(audit.trivial);
  CHECK(pres.rel_delta(1, 2).is_zero());
  CHECK(pres.lambda(1, 2) == 1);
}
