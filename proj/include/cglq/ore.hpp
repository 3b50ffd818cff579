#pragma once

#include <map>
#include <utility>

#include "cglq/spec.hpp"

namespace cglq {

// Iterated Ore extension presentation on X_1..X_n with diagonal twists
//   X_j * X_i = q^{lambda_{i,j}} X_i * X_j + Delta_j(X_i),   i < j.
// Tables are stored in relation form: rel_delta(i,j) is the tail of
//   X_i * X_j = q^{-lambda_{i,j}} X_j * X_i + rel_delta(i,j),
// matching the presentation produced by prepending generators; the skew
// derivation form is Delta_j(X_i) = -q^{lambda_{i,j}} rel_delta(i,j).
//
// Elements are kept in the ordered monomial basis X_1^{k_1} ... X_n^{k_n}.
// Products are normalized by rewriting; each substitution of a derivation
// value strictly lowers the top variable involved, so rewriting terminates.
class OrePresentation {
 public:
  OrePresentation(int n, std::vector<std::vector<long>> lambda);

  // Full lambda matrix from a spec (lambda_{i,j} = <lambda_i, h_j>), zero tables.
  static OrePresentation from_spec(const ExtensionSpec& spec);

  int n() const { return n_; }
  long lambda(int i, int j) const { return lambda_[i][j]; }
  const std::vector<std::vector<long>>& lambda_matrix() const { return lambda_; }

  const QElem& rel_delta(int i, int j) const;
  void set_rel_delta(int i, int j, QElem value);
  QElem delta_std(int j, int i) const;  // Delta_j(X_i)
  bool delta_row_zero(int i) const;     // all rel_delta(i, j) vanish

  QElem mul(const QElem& a, const QElem& b) const;
  QElem mul(const QElem& a, const QElem& b, const QElem& c) const;

  // sigma_j scaling on elements supported on variables < j.
  QElem sigma(int j, const QElem& a) const;
  QElem sigma_inv(int j, const QElem& a) const;
  // Twist of the reversed extension adjoining X_k in front: scales X_j by
  // q^{-lambda_{k,j}} for j > k. Support must be > k.
  QElem sigma_prepend(int k, const QElem& a) const;

  // Skew derivation Delta_j extended by Delta_j(a b) = sigma_j(a) Delta_j(b) + Delta_j(a) b.
  QElem apply_delta(int j, const QElem& a) const;

  QElem gen(int j) const { return QElem::variable(n_, j); }
  QElem unit() const { return QElem::constant(n_, QRational::one()); }

 private:
  QElem gen_times_mono(int j, const Exponent& w) const;
  void check_support_below(int j, const QElem& a, const char* who) const;

  int n_;
  std::vector<std::vector<long>> lambda_;
  std::vector<std::vector<QElem>> rel_delta_;
  // rewrite caches, keyed by (generator, monomial)
  mutable std::map<std::pair<int, Exponent>, QElem> mul_memo_;
  mutable std::map<std::pair<int, Exponent>, QElem> delta_memo_;
};

// Weight of an element under the torus action from the spec (X_i carries
// lambda_i). nullopt when monomials disagree.
std::optional<Weight> ore_weight(const ExtensionSpec& spec, const QElem& a);

}  // namespace cglq
