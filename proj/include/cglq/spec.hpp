#pragma once

#include <string>
#include <vector>

#include "cglq/elements.hpp"

namespace cglq {

// Character / cocharacter lattice vectors of the acting torus, both identified
// with Z^r.
using Weight = std::vector<long>;

inline long pair_weight(const Weight& lambda, const Weight& h) {
  if (lambda.size() != h.size()) fail(errc::length_mismatch, "weight/cocharacter rank mismatch");
  long s = 0;
  for (size_t i = 0; i < lambda.size(); ++i) s += lambda[i] * h[i];
  return s;
}

inline Weight weight_add(const Weight& a, const Weight& b) {
  Weight w = a;
  for (size_t i = 0; i < w.size(); ++i) w[i] += b[i];
  return w;
}

// Declarative description of a symmetric integral Poisson-CGL extension:
// n generators x_1..x_n acted on by a rank-r torus with weights lambda[j],
// cocharacters h[j], h_prime[j], and the derivation tables delta[j][i]
// (= delta_j(x_i), a polynomial in the variables strictly between i and j).
// All indices 0-based internally; text formats are 1-based.
struct ExtensionSpec {
  int n = 0;
  int r = 0;
  std::vector<Weight> lambda;
  std::vector<Weight> h;
  std::vector<Weight> h_prime;
  // delta[j][i] nonzero only for i < j
  std::vector<std::vector<MPoly>> delta;

  // lambda_{i,j} = <lambda_i, h_j>, the log of the diagonal action of theta_j on x_i.
  long lambda_pair(int i, int j) const { return pair_weight(lambda[i], h[j]); }
  long eta(int j) const { return pair_weight(lambda[j], h[j]); }
  // Pairing data of the reversed presentation used when x_k is adjoined in front.
  long eta_prepend(int k) const { return pair_weight(lambda[k], h_prime[k]); }
  long sigma_exp_prepend(int k, int j) const { return pair_weight(lambda[j], h_prime[k]); }

  const MPoly& delta_entry(int j, int i) const { return delta[j][i]; }
  bool delta_col_zero(int j, int from) const {  // delta_j == 0 on x_from..x_{j-1}
    for (int i = from; i < j; ++i)
      if (!delta[j][i].is_zero()) return false;
    return true;
  }
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string witness;  // nonempty on failure
};

struct ValidationReport {
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Structural and axiomatic validation:
//   support   -- delta_j(x_i) uses only variables strictly between i and j
//   pairing   -- <lambda_i,h_j> = -<lambda_j,h'_i>, eta_j != 0, <lambda_j,h'_j> != 0
//   homogeneity -- delta_j(x_i) homogeneous of weight lambda_i + lambda_j
//   theta_delta -- delta_j is a Poisson theta_j-derivation on generator pairs
//   equivariance -- [theta_j, delta_j] = eta_j delta_j on generators
//   jacobi    -- Jacobi identity on all generator triples
ValidationReport validate_spec(const ExtensionSpec& spec);

}  // namespace cglq
