#pragma once

#include <map>
#include <string>
#include <vector>

#include "chebfact/poly.hpp"

namespace chebfact {

// Scaled minimal polynomial of cos(2*pi/d): degree phi(d)/2 with leading
// coefficient 2^(phi(d)/2) for d > 2, and the degree-1 specials
// Psi_1 = 2x - 2, Psi_2 = 2x + 2. Dividing by the leading coefficient gives
// the monic minimal polynomial over Q.
struct PsiPoly {
    long long d = 0;
    IntPoly poly;
};

// One root cos(theta) of Psi_d, theta = 2*pi*k/d. For d > 2 the roots are
// exactly k in [1, d/2) coprime to d; for d in {1, 2} the single k = 1 spec
// stands for theta = 2*pi and pi respectively.
struct RootSpec {
    long long d = 0;
    long long k = 0;
    double theta() const;
    double cos_value() const;
};

// d-th cyclotomic polynomial, via x^d - 1 divided by the proper-divisor
// cyclotomics. Memoized; thread-safe. Requires d >= 1.
IntPoly cyclotomic(long long d);

// Memoized; thread-safe. Requires d >= 1.
PsiPoly psi(long long d);

// Root specs of Psi_d, ascending k. Requires d >= 1.
std::vector<RootSpec> psi_roots(long long d);

// Structural validation for an externally supplied Psi_d candidate: degree,
// leading coefficient, the exact constants for d <= 2, and a residual check
// at cos(2*pi/d) within 1e-6 relative to the coefficient magnitude. Returns
// an empty string when valid, else the reason. This rejects corruption, not
// forgery: a wrong entry engineered to satisfy all of the above is out of
// scope and only excluded for files this library wrote itself.
std::string psi_entry_defect(long long d, const IntPoly& poly);

// Seed the memo table with a validated entry (throws PreconditionViolation
// if psi_entry_defect rejects it, InternalInconsistency if it disagrees with
// an already computed value). Used by the CLI cache.
void psi_preload(long long d, const IntPoly& poly);

// Copy of every Psi_d currently in the memo table, for cache write-back.
std::map<long long, IntPoly> psi_snapshot();

}  // namespace chebfact
