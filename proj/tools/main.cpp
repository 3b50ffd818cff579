#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "cglq/io.hpp"
#include "cglq/verifier.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapExceeded = 3;

struct InputArgs {
  std::string path;
  std::string fixture;
};

cglq::ExtensionSpec resolve_spec(const InputArgs& in) {
  if (!in.fixture.empty()) return cglq::fixture_spec(in.fixture);
  if (in.path.empty()) cglq::fail(cglq::errc::parse_error, "give a spec file or --fixture NAME");
  return cglq::load_spec_file(in.path);
}

void add_input(CLI::App* cmd, InputArgs& in) {
  cmd->add_option("spec", in.path, "path to a spec JSON file");
  cmd->add_option("--fixture", in.fixture, "use a bundled fixture instead of a file");
}

int exit_code_for(const cglq::error& e) {
  switch (e.code()) {
    case cglq::errc::cap_exceeded:
      return kExitCapExceeded;
    default:
      return kExitInvalidInput;
  }
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) cglq::fail(cglq::errc::parse_error, "cannot write " + path);
  out << text << "\n";
}

struct FixtureOutcome {
  std::string name;
  bool ok = false;
  std::string message;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs and verifies preferred quantizations of symmetric integral "
               "Poisson-CGL extensions over Q[q^{±1}]"};
  app.require_subcommand(1);

  InputArgs in;
  long max_peel = cglq::kDefaultPeelCap;
  std::uint64_t seed = cglq::VerifyOptions{}.seed;
  std::string audit_path;
  std::string epsilon_text;
  bool do_verify = false;
  int jobs = 1;

  auto* validate = app.add_subcommand("validate", "check the axioms of an input spec");
  add_input(validate, in);

  auto* analyze = app.add_subcommand("analyze", "commutative invariants of a spec");
  add_input(analyze, in);

  auto* quantize_cmd = app.add_subcommand("quantize", "construct the preferred quantization");
  add_input(quantize_cmd, in);
  quantize_cmd->add_flag("--verify", do_verify, "run the full verifier afterwards");
  quantize_cmd->add_option("--audit", audit_path, "write the step audit to this file");
  quantize_cmd->add_option("--max-peel", max_peel, "iteration cap for basis conversion");
  quantize_cmd->add_option("--seed", seed, "seed for randomized checks");
  quantize_cmd->add_option("--epsilon", epsilon_text,
                           "rescale the first-generator tables by this unit of L");

  auto* verify_cmd = app.add_subcommand("verify", "quantize and run every check");
  add_input(verify_cmd, in);
  verify_cmd->add_option("--max-peel", max_peel, "iteration cap for basis conversion");
  verify_cmd->add_option("--seed", seed, "seed for randomized checks");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "bundled fixture operations");
  auto* fixtures_list = fixtures_cmd->add_subcommand("list", "list bundled fixtures");
  auto* fixtures_run = fixtures_cmd->add_subcommand("run", "quantize + verify all fixtures");
  fixtures_run->add_option("--jobs", jobs, "run fixtures on this many threads");
  fixtures_run->add_option("--seed", seed, "seed for randomized checks");
  fixtures_cmd->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) {
      cglq::ExtensionSpec spec = resolve_spec(in);
      cglq::ValidationReport rep = cglq::validate_spec(spec);
      std::cout << cglq::validation_report_json(rep) << "\n";
      return rep.ok() ? kExitOk : kExitInvalidInput;
    }

    if (*analyze) {
      cglq::ExtensionSpec spec = resolve_spec(in);
      cglq::ValidationReport rep = cglq::validate_spec(spec);
      if (!rep.ok()) {
        std::cout << cglq::validation_report_json(rep) << "\n";
        return kExitInvalidInput;
      }
      std::cout << cglq::analysis_report_json(spec) << "\n";
      return kExitOk;
    }

    if (*quantize_cmd) {
      cglq::ExtensionSpec spec = resolve_spec(in);
      cglq::QuantizeOptions qopts;
      qopts.max_peel = max_peel;
      cglq::QuantumPresentation qp = cglq::quantize(spec, qopts);
      if (!epsilon_text.empty())
        qp = cglq::scaled_variant(qp, cglq::parse_qlaurent(epsilon_text));
      std::cout << cglq::presentation_report_json(qp, audit_path.empty()) << "\n";
      if (!audit_path.empty()) write_out(audit_path, cglq::presentation_report_json(qp, true));
      if (do_verify) {
        cglq::VerifyOptions vopts;
        vopts.seed = seed;
        vopts.max_peel = max_peel;
        cglq::VerifyReport rep = cglq::run_all_checks(qp, vopts);
        std::cerr << cglq::verify_report_json(rep) << "\n";
        if (!rep.ok()) return kExitVerifyFailed;
      }
      return kExitOk;
    }

    if (*verify_cmd) {
      cglq::ExtensionSpec spec = resolve_spec(in);
      cglq::QuantizeOptions qopts;
      qopts.max_peel = max_peel;
      cglq::QuantumPresentation qp = cglq::quantize(spec, qopts);
      cglq::VerifyOptions vopts;
      vopts.seed = seed;
      vopts.max_peel = max_peel;
      cglq::VerifyReport rep = cglq::run_all_checks(qp, vopts);
      std::cout << cglq::verify_report_json(rep) << "\n";
      return rep.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (*fixtures_list) {
      for (const auto& f : cglq::bundled_fixtures()) std::cout << f.name << "\n";
      return kExitOk;
    }

    if (*fixtures_run) {
      const auto& fixtures = cglq::bundled_fixtures();
      std::vector<FixtureOutcome> outcomes(fixtures.size());
      int nthreads = std::max(1, jobs);
      std::vector<std::thread> pool;
      std::size_t stride = (fixtures.size() + nthreads - 1) / nthreads;
      for (int t = 0; t < nthreads; ++t) {
        std::size_t lo = t * stride, hi = std::min(fixtures.size(), lo + stride);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i) {
            outcomes[i].name = fixtures[i].name;
            try {
              cglq::QuantumPresentation qp =
                  cglq::quantize(cglq::parse_spec_json(fixtures[i].json));
              cglq::VerifyOptions vopts;
              vopts.seed = seed;
              cglq::VerifyReport rep = cglq::run_all_checks(qp, vopts);
              outcomes[i].ok = rep.ok();
              if (!rep.ok())
                for (const auto& c : rep.checks)
                  if (!c.pass) outcomes[i].message += c.name + ": " + c.witness + "; ";
            } catch (const std::exception& e) {
              outcomes[i].ok = false;
              outcomes[i].message = e.what();
            }
          }
        });
      }
      for (auto& th : pool) th.join();
      bool all_ok = true;
      for (const auto& o : outcomes) {
        std::cout << (o.ok ? "[pass] " : "[FAIL] ") << o.name;
        if (!o.message.empty()) std::cout << " -- " << o.message;
        std::cout << "\n";
        all_ok = all_ok && o.ok;
      }
      return all_ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const cglq::error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
