#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cglq/exponent.hpp"
#include "cglq/qscalar.hpp"

// Sparse product kernels shared by the commutative polynomial algebra and the
// quantum torus. Both are accumulations over all term pairs; the quantum case
// additionally picks up an integer power of q per pair from the commutation
// matrix. Each kernel has a serial reference implementation and an OpenMP
// variant; results are bit-identical because coefficient arithmetic is exact.

namespace cglq::kernels {

struct Config {
  bool parallel = true;
  // Pair-count threshold below which the serial path is used.
  std::size_t min_pairs_parallel = 1 << 14;
};

Config& config();

using IntMatrix = std::vector<std::vector<long>>;

using CommTerms = std::vector<std::pair<Exponent, Rational>>;
using CommMap = std::map<Exponent, Rational, TotalOrderLess>;
using QTerms = std::vector<std::pair<Exponent, QRational>>;
using QMap = std::map<Exponent, QRational, TotalOrderLess>;

// q-exponent picked up when the monomial v (left) crosses w (right) while
// normal-ordering Y^v * Y^w under the relations Y_i Y_j = q^{l[i][j]} Y_j Y_i.
long reorder_exponent(const IntMatrix& l, const Exponent& v, const Exponent& w);

void product_comm_serial(const CommTerms& a, const CommTerms& b, CommMap& out);
void product_comm_parallel(const CommTerms& a, const CommTerms& b, CommMap& out);
void product_comm(const CommTerms& a, const CommTerms& b, CommMap& out);

void product_twisted_serial(const QTerms& a, const QTerms& b, const IntMatrix& l, QMap& out);
void product_twisted_parallel(const QTerms& a, const QTerms& b, const IntMatrix& l, QMap& out);
void product_twisted(const QTerms& a, const QTerms& b, const IntMatrix& l, QMap& out);

}  // namespace cglq::kernels
