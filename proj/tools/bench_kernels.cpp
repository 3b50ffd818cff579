// Compares the serial and OpenMP sparse-product kernels on synthetic data
// sized well beyond the bundled fixtures: a dense commutative product and a
// quantum-torus product over a random commutation matrix.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "cglq/kernels.hpp"

using namespace cglq;
using namespace cglq::kernels;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

CommTerms random_comm_terms(std::mt19937_64& rng, int n, int terms) {
  std::uniform_int_distribution<int> expd(0, 6);
  std::uniform_int_distribution<long> coefd(1, 9);
  CommMap m;
  while (static_cast<int>(m.size()) < terms) {
    Exponent e(n);
    for (auto& x : e) x = expd(rng);
    m[e] = Rational(coefd(rng));
  }
  return {m.begin(), m.end()};
}

QTerms random_torus_terms(std::mt19937_64& rng, int n, int terms) {
  std::uniform_int_distribution<int> expd(-4, 4);
  std::uniform_int_distribution<int> qd(-3, 3);
  std::uniform_int_distribution<long> coefd(1, 9);
  QMap m;
  while (static_cast<int>(m.size()) < terms) {
    Exponent e(n);
    for (auto& x : e) x = expd(rng);
    m.emplace(e, QRational::q_power(qd(rng), Rational(coefd(rng))));
  }
  return {m.begin(), m.end()};
}

IntMatrix random_skew(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<long> d(-2, 2);
  IntMatrix l(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      l[i][j] = d(rng);
      l[j][i] = -l[i][j];
    }
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  int terms = argc > 1 ? std::atoi(argv[1]) : 1500;
  int n = 8;
  std::mt19937_64 rng(2024);

  std::printf("sparse product kernels, n=%d variables, %d x %d terms, %d threads\n", n, terms,
              terms, omp_get_max_threads());

  {
    CommTerms a = random_comm_terms(rng, n, terms);
    CommTerms b = random_comm_terms(rng, n, terms);
    CommMap serial, parallel;
    auto t0 = Clock::now();
    product_comm_serial(a, b, serial);
    double ts = ms_since(t0);
    t0 = Clock::now();
    product_comm_parallel(a, b, parallel);
    double tp = ms_since(t0);
    std::printf("commutative:  serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n", ts,
                tp, ts / tp, serial == parallel ? "results agree" : "MISMATCH");
  }

  {
    IntMatrix l = random_skew(rng, n);
    QTerms a = random_torus_terms(rng, n, terms);
    QTerms b = random_torus_terms(rng, n, terms);
    QMap serial, parallel;
    auto t0 = Clock::now();
    product_twisted_serial(a, b, l, serial);
    double ts = ms_since(t0);
    t0 = Clock::now();
    product_twisted_parallel(a, b, l, parallel);
    double tp = ms_since(t0);
    std::printf("quantum torus: serial %8.1f ms   parallel %8.1f ms   speedup %.2fx   %s\n", ts,
                tp, ts / tp, serial == parallel ? "results agree" : "MISMATCH");
  }

  return 0;
}
