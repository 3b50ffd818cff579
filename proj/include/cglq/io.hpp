#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cglq/spec.hpp"

namespace cglq {

// --- element and scalar text forms -----------------------------------------
//
// Monomials print as `c*x1^2*x3`, terms joined by ` + ` / ` - `, leading term
// first. Coefficients in Q(q) print q-powers explicitly (`q^-1`, `(1 - q^2)/2`).
// Parsers accept everything the printers emit plus redundant whitespace,
// parentheses and `/` by scalar expressions.

std::string poly_str(const MPoly& a, char letter);
std::string elem_str(const QElem& a, char letter);

// Parse a polynomial/Laurent expression in variables letter1..letterN over Q.
// Rejects q-dependent coefficients.
MPoly parse_poly(std::string_view text, int nvars, char letter);
// Parse an element with coefficients in Q(q).
QElem parse_element(std::string_view text, int nvars, char letter);
QLaurent parse_qlaurent(std::string_view text);
QRational parse_qrational(std::string_view text);

// --- extension spec JSON -----------------------------------------------------
//
// {"n":3, "r":2, "lambda":[[..]], "h":[[..]], "h_prime":[[..]],
//  "delta":{"3":{"1":"x2^2"}}}   (1-based indices, delta["j"]["i"] = delta_j(x_i))

ExtensionSpec parse_spec_json(const std::string& text);
ExtensionSpec load_spec_file(const std::string& path);
std::string spec_to_json(const ExtensionSpec& spec);

// --- bundled fixtures --------------------------------------------------------

struct Fixture {
  std::string name;
  std::string json;
};

const std::vector<Fixture>& bundled_fixtures();
ExtensionSpec fixture_spec(const std::string& name);

// --- report serialization ------------------------------------------------------
//
// All reports are JSON with 1-based indices and the text forms above; output
// is deterministic (sorted keys, canonical term order) so fixture runs can be
// compared bytewise.

struct QuantumPresentation;  // quantizer.hpp
struct VerifyReport;         // verifier.hpp

std::string validation_report_json(const ValidationReport& rep);
std::string analysis_report_json(const ExtensionSpec& spec);
std::string presentation_report_json(const QuantumPresentation& qp, bool include_audit);
std::string verify_report_json(const VerifyReport& rep);

}  // namespace cglq
