#pragma once

#include "cglq/quantum_analysis.hpp"

namespace cglq {

struct QuantizeOptions {
  long max_peel = kDefaultPeelCap;
  // Re-derive the updated prime elements through the commutation identity and
  // compare with the fresh analysis of the extended algebra.
  bool audit_crosscheck = true;
};

// Per-step record of the induction: which generator was adjoined, the chain
// data used to build the derivation, and the prime elements predicted by the
// one-step update identity.
struct StepAudit {
  int k = -1;
  bool trivial = true;  // the induced derivation vanished
  int pivot = -1;
  int m = 0;
  long eta = 0;
  CommDChain comm_chain;
  QDChain q_chain;
  QElem D;                           // distinguished element in tail torus coordinates
  std::vector<std::pair<int, QElem>> predicted_Y;  // chain indices -> updated prime elements
};

// A constructed quantization: the relation tables over L together with the
// audit trail of the induction. Self-contained (owns a copy of the input).
struct QuantumPresentation {
  ExtensionSpec spec;
  OrePresentation pres;
  std::vector<StepAudit> steps;  // k = n-2 down to 0

  // Relation tail of X_i * X_j = q^{-lambda_{i,j}} X_j * X_i + delta_rel(i,j).
  const QElem& delta_rel(int i, int j) const { return pres.rel_delta(i, j); }
};

// Build the preferred quantization of a validated spec by adjoining
// generators from the last to the first.
QuantumPresentation quantize(const ExtensionSpec& spec, const QuantizeOptions& opts = {});

// One induction step: extend the presentation (valid on window [k+1, n)) to
// window [k, n) by constructing the twisted derivation from the distinguished
// element of the prepend chain.
StepAudit prepend(OrePresentation& pres, const ExtensionSpec& spec, int k,
                  const QuantizeOptions& opts);

// Rescale the derivation table of the *first* generator by epsilon in L with
// epsilon(1) = 1; the result is a quantization of the same input.
QuantumPresentation scaled_variant(const QuantumPresentation& qp, const QLaurent& epsilon);

// Recover epsilon from a rescaled variant by exact division of the
// first-generator tables; errors if the tables are not proportional.
QRational recover_epsilon(const QuantumPresentation& base, const QuantumPresentation& variant);

}  // namespace cglq
