#pragma once

#include <optional>

#include "cglq/spec.hpp"

namespace cglq {

// {x_i, x_j} from the generator table, any i != j.
MPoly bracket_gen(const ExtensionSpec& spec, int i, int j);

// Poisson bracket on the polynomial algebra, extended from the generator
// table by bilinearity and the Leibniz rule.
MPoly bracket(const ExtensionSpec& spec, const MPoly& a, const MPoly& b);

// Torus weight of a homogeneous element; nullopt when monomial weights differ.
// Errors (ZeroInput) on the zero element.
std::optional<Weight> weight_of(const ExtensionSpec& spec, const MPoly& a);

// theta_j: diagonal derivation scaling each monomial by its weight paired with h_j.
MPoly theta_apply(const ExtensionSpec& spec, int j, const MPoly& a);
// Diagonal derivation for an arbitrary cocharacter.
MPoly diag_derivation(const ExtensionSpec& spec, const Weight& h, const MPoly& a);

// delta_j extended from the generator table by the Leibniz rule.
MPoly delta_apply(const ExtensionSpec& spec, int j, const MPoly& a);

// Derivation with prescribed generator values, extended by Leibniz.
MPoly derivation_apply(const std::vector<MPoly>& gen_values, const MPoly& a);

// Partial derivative d/dx_i.
MPoly partial(const MPoly& a, int i);

}  // namespace cglq
