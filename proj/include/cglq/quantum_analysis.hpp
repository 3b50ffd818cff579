#pragma once

#include "cglq/comm_analysis.hpp"
#include "cglq/ore.hpp"
#include "cglq/torus.hpp"

namespace cglq {

inline constexpr long kDefaultPeelCap = 100000;

// Quantum counterpart of CommAnalysis on the tail window [ws, n): the prime
// element sequence Y_j computed by
//   Y_j = Y_{p(j)} X_j + (1 - omega_j)^{-1} (Delta_j o sigma_j^{-1})(Y_{p(j)}),
// the induced q-commutation matrix, the torus embedding X_j = Y_{p(j)}^{-1}(Y_j + C_j),
// and its inverse by leading-exponent peeling.
class QuantumAnalysis {
 public:
  QuantumAnalysis(const OrePresentation& pres, const CommAnalysis& comm,
                  long peel_cap = kDefaultPeelCap);

  const OrePresentation& pres() const { return *pres_; }
  const CommAnalysis& comm() const { return *comm_; }
  int n() const { return pres_->n(); }
  int ws() const { return comm_->ws(); }

  const QElem& Y(int j) const { return Y_[j]; }
  const QElem& C(int j) const { return C_[j]; }
  long l_entry(int i, int j) const { return torus_.l[i][j]; }
  const QTorusPresentation& torus() const { return torus_; }

  // N^n-degree of Y_j.
  Exponent degree_pattern(int j) const { return Y_[j].degree(); }

  // Lower-triangular unit 0/1 matrix whose column j is the degree of Y_j.
  const std::vector<std::vector<int>>& leading_transform() const { return T_; }

  QElem embed_to_torus(const QElem& a) const;
  const QElem& embedded_generator(int j) const { return embed_x_[j]; }
  QElem embed_mono(const Exponent& u) const;

  // Inverse of the embedding on its image by peeling leading exponents;
  // errors with NotInSubalgebra / CapExceeded.
  QElem torus_to_ore(const QElem& g) const;

  // Smallest s with Y_j * X_i = q^s X_i * Y_j, or error if not proportional.
  long normality_exponent(int j, int i) const;

 private:
  const OrePresentation* pres_;
  const CommAnalysis* comm_;
  long peel_cap_;
  std::vector<QElem> Y_, C_, embed_x_;
  QTorusPresentation torus_;
  std::vector<std::vector<int>> T_;
  mutable std::map<Exponent, QElem> embed_memo_;
};

// Quantum chain of distinguished elements of a prepend step, built bottom-up
// from D^{(m)} = f(d^{(m)}) by
//   D^{(i)} = D^{(i+1)} + omega_{p^i} Y_{p^i}^{-1} * B_{p^i} * (D^{(i+1)} - D^{(i+2)}),
// and cross-checked against the closed telescoping product form.
struct QDChain {
  int pivot = -1;
  int m = 0;
  long eta = 0;             // pairing of the adjoined generator with its own cocharacter
  std::vector<QElem> D;     // D[0..m]
  std::vector<QElem> B;     // B[i] = B_{p^i(pivot)} for i in [0, m-1]
  std::vector<QElem> Mq;    // Y_{p^{i+1}} Y_{p^i} (D[i]-D[i+1]), single monomials
};

// Constant part of C_k in the torus, with the predecessor variable split off.
QElem compute_B(const QuantumAnalysis& qa, int k);

QDChain compute_D_chain(const QuantumAnalysis& qa, const CommDChain& comm_chain,
                        const PrependData& pre);

// Y_{p^i} * D^{(i)} converted back to the Ore basis; used by the L-form check.
QElem chain_product_in_ore(const QuantumAnalysis& qa, const QDChain& chain, int i);

}  // namespace cglq
