#pragma once

#include <cstdint>

#include "cglq/quantizer.hpp"

namespace cglq {

struct VerifyOptions {
  std::uint64_t seed = 556742809;  // overridable on the command line
  int semiclassical_samples = 20;
  int assoc_triples = 200;
  int roundtrip_samples = 100;
  int max_degree = 3;
  long max_peel = kDefaultPeelCap;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Independent machine checks of a constructed (or supplied) presentation
// against its Poisson input. Every check runs; failures never abort the suite.
CheckResult semiclassical_check(const ExtensionSpec& spec, const OrePresentation& pres,
                                const VerifyOptions& opts);
CheckResult y_congruence_check(const ExtensionSpec& spec, const OrePresentation& pres,
                               const VerifyOptions& opts);
CheckResult nilpotency_check(const OrePresentation& pres);
CheckResult distinguished_checks(const QuantumPresentation& qp, const VerifyOptions& opts);
CheckResult structure_checks(const ExtensionSpec& spec, const OrePresentation& pres,
                             const VerifyOptions& opts);
CheckResult engine_checks(const ExtensionSpec& spec, const OrePresentation& pres,
                          const VerifyOptions& opts);

VerifyReport run_all_checks(const QuantumPresentation& qp, const VerifyOptions& opts = {});

}  // namespace cglq
