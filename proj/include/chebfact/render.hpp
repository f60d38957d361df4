#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chebfact/chebyshev.hpp"
#include "chebfact/factorize.hpp"
#include "chebfact/poly.hpp"

namespace chebfact {

enum class OutputFormat { Plain, Json, Latex };

std::optional<OutputFormat> parse_format(const std::string& name);
std::optional<ChebKind> parse_kind(const std::string& name);
std::optional<Variant> parse_variant(const std::string& name);
std::string kind_name(ChebKind kind);
std::string variant_name(Variant variant);

// ASCII polynomial, descending degree: "64x^6 + 32x^5 - 80x^4 - ... - 1".
std::string to_plain(const IntPoly& p);
std::string to_plain(const RatPoly& p);  // rational coefficients as p/q

// LaTeX polynomial, descending degree, braced exponents: "4x^{2} - 3".
std::string to_latex(const IntPoly& p);
std::string to_latex(const RatPoly& p);

// Ascending coefficient strings for JSON payloads: decimal for integers,
// "p/q" (q > 0, reduced) for non-integer rationals.
std::vector<std::string> coeff_strings(const IntPoly& p);
std::vector<std::string> coeff_strings(const RatPoly& p);

// "Psi_8" (plain/json) or "\Psi_{8}(x)" (latex).
std::string psi_label(long long d, OutputFormat format);

// "V_12(x) + 1", "W_25(x)^2 - 1"; latex variant with braced subscripts.
std::string target_label(const FactorTarget& target, OutputFormat format);

}  // namespace chebfact
