#include "cglq/kernels.hpp"

#include <omp.h>

namespace cglq::kernels {

Config& config() {
  static Config cfg;
  return cfg;
}

long reorder_exponent(const IntMatrix& l, const Exponent& v, const Exponent& w) {
  long s = 0;
  const size_t n = v.size();
  for (size_t i = 1; i < n; ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < i; ++j) {
      if (w[j] == 0) continue;
      s += static_cast<long>(v[i]) * w[j] * l[i][j];
    }
  }
  return s;
}

namespace {

template <class Map, class C>
void add_term(Map& m, const Exponent& e, C&& c) {
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, std::forward<C>(c));
  } else {
    it->second += c;
    if (it->second == typename Map::mapped_type(0)) m.erase(it);
  }
}

}  // namespace

void product_comm_serial(const CommTerms& a, const CommTerms& b, CommMap& out) {
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(out, exp_add(ea, eb), ca * cb);
}

void product_comm_parallel(const CommTerms& a, const CommTerms& b, CommMap& out) {
  const int na = static_cast<int>(a.size());
#pragma omp parallel
  {
    CommMap local;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < na; ++i)
      for (const auto& [eb, cb] : b) add_term(local, exp_add(a[i].first, eb), a[i].second * cb);
#pragma omp critical(cglq_product_comm)
    for (auto& [e, c] : local) add_term(out, e, std::move(c));
  }
}

void product_comm(const CommTerms& a, const CommTerms& b, CommMap& out) {
  const Config& cfg = config();
  if (cfg.parallel && a.size() * b.size() >= cfg.min_pairs_parallel)
    product_comm_parallel(a, b, out);
  else
    product_comm_serial(a, b, out);
}

void product_twisted_serial(const QTerms& a, const QTerms& b, const IntMatrix& l, QMap& out) {
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      long s = reorder_exponent(l, ea, eb);
      add_term(out, exp_add(ea, eb), ca * cb * QRational::q_power(static_cast<int>(s)));
    }
}

void product_twisted_parallel(const QTerms& a, const QTerms& b, const IntMatrix& l, QMap& out) {
  const int na = static_cast<int>(a.size());
#pragma omp parallel
  {
    QMap local;
#pragma omp for schedule(static) nowait
    for (int i = 0; i < na; ++i)
      for (const auto& [eb, cb] : b) {
        long s = reorder_exponent(l, a[i].first, eb);
        add_term(local, exp_add(a[i].first, eb),
                 a[i].second * cb * QRational::q_power(static_cast<int>(s)));
      }
#pragma omp critical(cglq_product_twisted)
    for (auto& [e, c] : local) add_term(out, e, std::move(c));
  }
}

void product_twisted(const QTerms& a, const QTerms& b, const IntMatrix& l, QMap& out) {
  const Config& cfg = config();
  if (cfg.parallel && a.size() * b.size() >= cfg.min_pairs_parallel)
    product_twisted_parallel(a, b, l, out);
  else
    product_twisted_serial(a, b, l, out);
}

}  // namespace cglq::kernels
