#include "cglq/io.hpp"

namespace cglq {

// Bundled inputs covering the interesting shapes: no derivations at all
// (quantum-plane), one derivation with a length-0 predecessor chain (weyl3),
// a rank-1 two-step chain (chain3), and 2x2 matrix entries with a rank-4
// torus (m2x2).
const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"quantum-plane", R"({
  "n": 2, "r": 2,
  "lambda": [[1, 0], [0, 1]],
  "h":       [[1, 0], [1, 1]],
  "h_prime": [[1, -1], [0, 1]],
  "delta": {}
})"},
      {"weyl3", R"({
  "n": 3, "r": 2,
  "lambda": [[1, 0], [1, 1], [1, 2]],
  "h":       [[1, 0], [1, 0], [0, 1]],
  "h_prime": [[-2, 1], [-1, 0], [0, 1]],
  "delta": {"3": {"1": "x2^2"}}
})"},
      {"chain3", R"({
  "n": 3, "r": 1,
  "lambda": [[1], [-1], [1]],
  "h":       [[1], [1], [-1]],
  "h_prime": [[1], [-1], [1]],
  "delta": {"2": {"1": "1"}, "3": {"2": "1"}}
})"},
      {"m2x2", R"({
  "n": 4, "r": 4,
  "lambda": [[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]],
  "h":       [[1, 0, 0, 0], [-1, 0, 0, 0], [0, 0, -1, 0], [0, -1, 0, -1]],
  "h_prime": [[1, 0, 1, 0], [0, 0, 0, 1], [0, 1, 0, 0], [0, 1, 0, 1]],
  "delta": {"4": {"1": "-2*x2*x3"}}
})"},
  };
  return fixtures;
}

ExtensionSpec fixture_spec(const std::string& name) {
  for (const auto& f : bundled_fixtures())
    if (f.name == name) return parse_spec_json(f.json);
  fail(errc::parse_error, "unknown fixture '" + name + "'");
}

}  // namespace cglq
