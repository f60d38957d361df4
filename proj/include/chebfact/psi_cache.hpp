#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "chebfact/poly.hpp"

namespace chebfact {

// A cache file failed to load: unreadable, malformed JSON, wrong version, or
// an entry that is not a structurally valid Psi_d. The message names the
// offending entry when there is one.
struct PsiCacheError : std::runtime_error {
    explicit PsiCacheError(const std::string& what) : std::runtime_error(what) {}
};

// On-disk format, version 1:
//   {"version":1,"entries":{"<d>":["c0","c1",...],...}}
// Coefficients are decimal strings ascending by degree with a nonzero last
// element; keys are decimal d >= 1. Every entry is validated against the
// Psi_d structure (degree, leading coefficient, root residual) on load.
std::map<long long, IntPoly> load_psi_cache(const std::string& path);

// Writes the canonical form: entries ascending by d, compact JSON, trailing
// newline. Byte-identical output for identical entry maps.
void save_psi_cache(const std::string& path, const std::map<long long, IntPoly>& entries);

}  // namespace chebfact
