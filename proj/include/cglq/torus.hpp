#pragma once

#include "cglq/spec.hpp"

namespace cglq {

// Quantum torus on Y_1..Y_n with Y_i * Y_j = q^{l[i][j]} Y_j * Y_i.
// Elements are normal-ordered Y_1^{v_1} ... Y_n^{v_n} with coefficients in Q(q).
struct QTorusPresentation {
  int n = 0;
  std::vector<std::vector<long>> l;  // skew-symmetric

  QTorusPresentation() = default;
  QTorusPresentation(int n_, std::vector<std::vector<long>> l_) : n(n_), l(std::move(l_)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (l[i][j] != -l[j][i]) fail(errc::internal, "commutation matrix must be skew-symmetric");
  }

  QElem mul(const QElem& a, const QElem& b) const;
  QElem mul(const QElem& a, const QElem& b, const QElem& c) const;
  QElem mono(const Exponent& v, const QRational& c = QRational::one()) const {
    return QElem(n, v, c);
  }
  // Inverse of a single torus monomial.
  QElem inv_mono(const QElem& m) const;
};

// The linear basis map sending the commutative Laurent monomial y^v to the
// normal-ordered torus monomial Y^v, extended coefficientwise.
QElem f_map(const MPoly& g);
QElem f_map_mono(int n, const Exponent& v);

// Diagonal scaling by q^{<weight, h>} per monomial, with the torus variables
// carrying the prescribed weights.
QElem scale_by_weights(const QElem& a, const std::vector<Weight>& var_weights, const Weight& h);

}  // namespace cglq
