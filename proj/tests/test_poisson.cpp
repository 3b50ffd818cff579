#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cglq/io.hpp"
#include "cglq/poisson.hpp"

using namespace cglq;

namespace {

MPoly random_poly(std::mt19937_64& rng, int n, int max_deg = 3, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<long> coefd(-4, 4);
  std::uniform_int_distribution<int> expd(0, max_deg);
  MPoly a(n);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    Exponent e(n, 0);
    int budget = max_deg;
    for (int v = 0; v < n && budget > 0; ++v) {
      int d = expd(rng) % (budget + 1);
      e[v] = d;
      budget -= d;
    }
    a.add(e, Rational(coefd(rng)));
  }
  return a;
}

}  // namespace

TEST_CASE("total order on Z^r") {
  CHECK(compare_total_order({5, 0}, {0, 1}) < 0);
  CHECK(compare_total_order({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(compare_total_order({0, -1, 2}, {0, 0, 2}) < 0);
  CHECK_THROWS_AS(compare_total_order({1}, {1, 2}), error);
}

TEST_CASE("total order is total and compatible with addition") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> d(-4, 4);
  auto rand_vec = [&](int n) {
    Exponent e(n);
    for (auto& x : e) x = d(rng);
    return e;
  };
  for (int i = 0; i < 300; ++i) {
    Exponent u = rand_vec(3), v = rand_vec(3), s = rand_vec(3), t = rand_vec(3);
    int c1 = compare_total_order(u, v);
    CHECK(compare_total_order(v, u) == -c1);
    if (c1 <= 0 && compare_total_order(s, t) <= 0)
      CHECK(compare_total_order(exp_add(u, s), exp_add(v, t)) <= 0);
  }
}

TEST_CASE("validate bundled fixtures") {
  for (const auto& f : bundled_fixtures()) {
    INFO(f.name);
    ExtensionSpec spec = parse_spec_json(f.json);
    ValidationReport rep = validate_spec(spec);
    for (const auto& c : rep.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.pass);
    }
  }
}

TEST_CASE("validation rejects eta = 0") {
  ExtensionSpec spec = fixture_spec("quantum-plane");
  spec.h[1] = {1, 0};  // now <lambda_2, h_2> = 0
  ValidationReport rep = validate_spec(spec);
  CHECK_FALSE(rep.ok());
  bool pairing_failed = false;
  for (const auto& c : rep.checks)
    if (c.name == "pairing" && !c.pass) pairing_failed = true;
  CHECK(pairing_failed);
}

TEST_CASE("validation rejects bad delta support") {
  ExtensionSpec spec = fixture_spec("weyl3");
  spec.delta[2][0] = parse_poly("x1*x2", 3, 'x');  // delta_3(x_1) may not involve x1
  ValidationReport rep = validate_spec(spec);
  for (const auto& c : rep.checks)
    if (c.name == "support") CHECK_FALSE(c.pass);
}

TEST_CASE("validation rejects inhomogeneous delta") {
  ExtensionSpec spec = fixture_spec("weyl3");
  spec.delta[2][0] = parse_poly("x2", 3, 'x');  // weight lambda_2 != lambda_1 + lambda_3
  ValidationReport rep = validate_spec(spec);
  for (const auto& c : rep.checks)
    if (c.name == "homogeneity") CHECK_FALSE(c.pass);
}

TEST_CASE("validation catches a broken derivation table") {
  ExtensionSpec spec = fixture_spec("m2x2");
  spec.delta[3][0] = parse_poly("-2*x2^2", 4, 'x');
  ValidationReport rep = validate_spec(spec);
  CHECK_FALSE(rep.ok());
}

TEST_CASE("generator brackets") {
  ExtensionSpec qp = fixture_spec("quantum-plane");
  // {x_2, x_1} = lambda_{1,2} x_1 x_2 = x_1 x_2
  CHECK(bracket_gen(qp, 1, 0) == parse_poly("x1*x2", 2, 'x'));
  CHECK(bracket_gen(qp, 0, 1) == parse_poly("-x1*x2", 2, 'x'));

  ExtensionSpec w3 = fixture_spec("weyl3");
  CHECK(bracket_gen(w3, 2, 0) == parse_poly("x2^2", 3, 'x'));
  CHECK(bracket_gen(w3, 2, 1) == parse_poly("x2*x3", 3, 'x'));
}

TEST_CASE("bracket is antisymmetric and satisfies Leibniz") {
  std::mt19937_64 rng(29);
  ExtensionSpec w3 = fixture_spec("weyl3");
  for (int i = 0; i < 50; ++i) {
    MPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    CHECK(bracket(w3, a, a).is_zero());
    CHECK(bracket(w3, a, b) == -bracket(w3, b, a));
    CHECK(bracket(w3, mul(a, b), c) == mul(a, bracket(w3, b, c)) + mul(bracket(w3, a, c), b));
  }
}

TEST_CASE("bracket adds weights of homogeneous elements") {
  std::mt19937_64 rng(31);
  ExtensionSpec w3 = fixture_spec("weyl3");
  std::uniform_int_distribution<int> vd(0, 2);
  for (int i = 0; i < 80; ++i) {
    MPoly a = MPoly::variable(3, vd(rng)), b = MPoly::variable(3, vd(rng));
    a = mul(a, MPoly::variable(3, vd(rng)));
    MPoly br = bracket(w3, a, b);
    if (br.is_zero()) continue;
    auto wa = weight_of(w3, a), wb = weight_of(w3, b), wc = weight_of(w3, br);
    REQUIRE(wa);
    REQUIRE(wb);
    REQUIRE(wc);
    CHECK(*wc == weight_add(*wa, *wb));
  }
}

TEST_CASE("weight_of") {
  ExtensionSpec w3 = fixture_spec("weyl3");
  CHECK(*weight_of(w3, parse_poly("x2^2", 3, 'x')) == Weight{2, 2});
  CHECK(*weight_of(w3, parse_poly("x1*x3 - 1/2*x2^2", 3, 'x')) == Weight{2, 2});
  ExtensionSpec qp = fixture_spec("quantum-plane");
  CHECK_FALSE(weight_of(qp, parse_poly("x1 + x2", 2, 'x')));
  CHECK_THROWS_AS(weight_of(qp, MPoly(2)), error);
}

TEST_CASE("polynomial string round trip") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    MPoly a = random_poly(rng, 3);
    CHECK(parse_poly(poly_str(a, 'x'), 3, 'x') == a);
  }
  CHECK_THROWS_AS(parse_poly("x0^2", 3, 'x'), error);
  CHECK(parse_poly("0", 3, 'x').is_zero());
}

TEST_CASE("spec JSON round trip") {
  for (const auto& f : bundled_fixtures()) {
    ExtensionSpec spec = parse_spec_json(f.json);
    ExtensionSpec again = parse_spec_json(spec_to_json(spec));
    CHECK(again.n == spec.n);
    CHECK(again.r == spec.r);
    CHECK(again.lambda == spec.lambda);
    CHECK(again.h == spec.h);
    CHECK(again.h_prime == spec.h_prime);
    for (int j = 0; j < spec.n; ++j)
      for (int i = 0; i < j; ++i) CHECK(again.delta[j][i] == spec.delta[j][i]);
  }
}
