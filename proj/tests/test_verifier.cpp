#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cglq/io.hpp"
#include "cglq/verifier.hpp"

using namespace cglq;

TEST_CASE("full verification passes on every bundled fixture") {
  for (const auto& f : bundled_fixtures()) {
    INFO(f.name);
    QuantumPresentation qp = quantize(parse_spec_json(f.json));
    VerifyReport rep = run_all_checks(qp);
    for (const auto& c : rep.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("reports are reproducible for a fixed seed") {
  QuantumPresentation qp = quantize(fixture_spec("weyl3"));
  VerifyOptions opts;
  opts.seed = 12345;
  VerifyReport a = run_all_checks(qp, opts);
  VerifyReport b = run_all_checks(qp, opts);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].pass == b.checks[i].pass);
    CHECK(a.checks[i].witness == b.checks[i].witness);
  }
  CHECK(a.seed == 12345);
}

TEST_CASE("semiclassical check on a commutative-twist spec gives zero brackets") {
  ExtensionSpec spec;
  spec.n = 2;
  spec.r = 2;
  spec.lambda = {{1, 0}, {0, 1}};
  spec.h = {{1, 0}, {0, 1}};
  spec.h_prime = spec.h;
  spec.delta.assign(2, std::vector<MPoly>(2, MPoly(2)));
  REQUIRE(validate_spec(spec).ok());
  QuantumPresentation qp = quantize(spec);
  CHECK(bracket_gen(spec, 0, 1).is_zero());
  CHECK(semiclassical_check(spec, qp.pres, {}).pass);
}

TEST_CASE("nilpotency check rejects a self-referential table") {
  // Hand-made invalid presentation: Delta_2(X_1) contains X_1 itself.
  OrePresentation pres(2, {{0, 1}, {0, 0}});
  pres.set_rel_delta(0, 1, parse_element("X1", 2, 'X'));
  CheckResult res = nilpotency_check(pres);
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.witness.empty());
}

TEST_CASE("semiclassical check catches a wrong derivation tail") {
  ExtensionSpec spec = fixture_spec("weyl3");
  QuantumPresentation qp = quantize(spec);
  // Tamper: flip the sign of the only relation tail.
  qp.pres.set_rel_delta(0, 2, -qp.pres.rel_delta(0, 2));
  CheckResult res = semiclassical_check(spec, qp.pres, {});
  CHECK_FALSE(res.pass);
  CHECK_FALSE(res.witness.empty());
}

TEST_CASE("scaled variants still verify semiclassically and recover epsilon") {
  QuantumPresentation qp = quantize(fixture_spec("weyl3"));
  for (const char* s : {"1", "q", "q^-1", "2 - q"}) {
    QLaurent eps = parse_qlaurent(s);
    QuantumPresentation v = scaled_variant(qp, eps);
    INFO(s);
    CHECK(semiclassical_check(v.spec, v.pres, {}).pass);
    QRational rec = recover_epsilon(qp, v);
    CHECK(rec == QRational(eps));
    CHECK(rec.is_in_L());
    CHECK(rec.eval_at_one() == 1);
  }
}
