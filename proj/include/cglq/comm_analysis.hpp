#pragma once

#include <vector>

#include "cglq/poisson.hpp"

namespace cglq {

// Data of one generator adjoined *in front* of the tail algebra on variables
// ws..n-1: the twisted derivation on the tail induced by the symmetric
// presentation, and the pairing constants of the reversed extension.
struct PrependData {
  int k = -1;                // index of the generator being adjoined
  std::vector<MPoly> delta;  // delta(x_j) = -delta_j(x_k), indexed by j (full length n)
  long eta = 0;              // <lambda_k, h'_k>
  Weight lambda0;            // weight of x_k
  std::vector<long> sigma_exp;  // l_j = <lambda_j, h'_k> for j > k

  bool is_zero() const {
    for (const auto& d : delta)
      if (!d.is_zero()) return false;
    return true;
  }
};

PrependData make_prepend_data(const ExtensionSpec& spec, int k);

// The homogeneous Poisson prime chain d^{(i)} = delta(y_{p^i(k)}) / (eta y_{p^i(k)})
// of a prepend step, together with the monomials M^{(i)} tying consecutive
// differences together.
struct CommDChain {
  int pivot = -1;  // chain maximum hit by delta
  int m = 0;       // largest i with p^i(pivot) defined
  long eta = 0;
  std::vector<MPoly> d;  // d[0..m] in y-coordinates; d[m+1] = 0 implied
  std::vector<MPoly> M;  // M[0..m], each a single monomial with nonnegative exponents
};

// Commutative invariants of the tail subextension on variables [ws, n):
// the prime-element sequence y_j, the predecessor map p, level sets, the
// log-canonical bracket matrix of the Laurent torus on the y_j, the inverse
// generator substitution, and the constant monomials b_k.
class CommAnalysis {
 public:
  CommAnalysis(const ExtensionSpec& spec, int ws);

  const ExtensionSpec& spec() const { return *spec_; }
  int ws() const { return ws_; }
  int n() const { return spec_->n; }

  const MPoly& y(int j) const { return y_[j]; }
  const MPoly& c(int j) const { return c_[j]; }
  int p(int j) const { return p_[j]; }  // -1 when delta_j vanishes on the tail
  // p^i(j); p^0 = id, -1 once the chain leaves the window
  int p_iter(int j, int i) const;
  const Weight& y_weight(int j) const { return wty_[j]; }

  const std::vector<std::vector<int>>& level_sets() const { return levels_; }
  int rank() const { return static_cast<int>(levels_.size()); }
  bool is_chain_max(int j) const;  // no l in the window has p(l) == j
  // Indices i < j whose prime element survives into A_j.
  std::vector<int> surviving_primes(int j) const;

  long kappa(int i, int j) const { return kappa_[i][j]; }
  const std::vector<std::vector<long>>& kappa_matrix() const { return kappa_; }
  // Lambda_Y(v, w) = v^T kappa w
  long lambda_y(const Exponent& v, const Exponent& w) const;

  // Image of a polynomial in the Laurent algebra on the y_j.
  MPoly embed(const MPoly& a) const;
  // x_l in y-coordinates.
  const MPoly& embedded_generator(int l) const { return embed_x_[l]; }
  // c_k in y-coordinates (memoized).
  const MPoly& c_in_y(int k) const { return c_y_[k]; }

  // Weight of a Laurent element in y-coordinates (nullopt if inhomogeneous).
  std::optional<Weight> laurent_weight(const MPoly& g) const;

  // The constant monomial b_k: the y_{p(k)}-free part of c_k, cross-checked
  // against its weight and bracket characterization.
  MPoly b(int k) const;

  // N^n-degree of y_j (all entries 0/1).
  Exponent degree_pattern(int j) const { return y_[j].degree(); }

 private:
  const ExtensionSpec* spec_;
  int ws_;
  std::vector<MPoly> y_, c_, c_y_, embed_x_;
  std::vector<int> p_;
  std::vector<Weight> wty_;
  std::vector<std::vector<int>> levels_;
  std::vector<std::vector<long>> kappa_;
};

// Compute and internally verify the d-chain of a nonzero prepend derivation:
// pivot uniqueness, the chain vanishing pattern, the monomial quotients, and
// the telescoping recursion between consecutive differences.
CommDChain compute_d_chain(const CommAnalysis& an, const PrependData& pre);

// delta extended to the Laurent algebra by the Leibniz rule (y-coordinates).
MPoly delta_on_torus(const CommAnalysis& an, const PrependData& pre, const MPoly& g);

// Bracket of two Laurent elements in y-coordinates via the log-canonical matrix.
MPoly torus_bracket(const CommAnalysis& an, const MPoly& a, const MPoly& b);

// theta of the prepend step on a Laurent element (diagonal by weights).
MPoly theta_on_torus(const CommAnalysis& an, const PrependData& pre, const MPoly& g);

}  // namespace cglq
