#pragma once

#include <string>
#include <vector>

#include "chebfact/poly.hpp"
#include "chebfact/psi.hpp"

namespace chebfact {

// The two kinds whose +1/-1 variants split into Psi factors.
enum class VwKind { V, W };

// Which divisor product a factor came from: divisors of 2n or of 2n+2.
enum class DivisorSource { Of2n, Of2nPlus2 };

enum class Parity { Even, Odd };

enum class Variant { PlusOne, MinusOne, SquaredMinusOne };

struct DivisorTerm {
    long long d = 0;
    DivisorSource source = DivisorSource::Of2n;
    long long quotient = 0;  // (2n or 2n+2) / d
    Parity parity = Parity::Even;  // of the quotient; decides the variant
};

struct PsiFactor {
    PsiPoly psi;
    DivisorTerm term;
};

struct FactorTarget {
    VwKind kind = VwKind::V;
    int n = 1;
    Variant variant = Variant::PlusOne;
};

// A complete factor list for one target, factors in canonical order
// (ascending d; on the impossible tie, Of2n first) with their product.
struct Factorization {
    FactorTarget target;
    std::vector<PsiFactor> factors;
    IntPoly expanded;
};

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// The target polynomial itself, generated from the recurrences (never from
// Psi products): V_n or W_n, then +1 / -1 / squared minus one.
IntPoly target_poly(const FactorTarget& target);

// Split of gen^2 - 1 into the full Psi product:
//   V_n^2 - 1 = Psi_1 * prod{d | 2n, d > 2} * prod{d | 2n+2, d > 2}
//   W_n^2 - 1 = Psi_2 * prod{d | 2n, d > 2} * prod{d | 2n+2, d > 2}
// (the d = 1 / d = 2 specials are carried as divisor terms of 2n).
// Requires n >= 1.
Factorization factor_squared_minus_one(VwKind kind, int n);

// The sign-variant split. sign = +1 factors gen + 1, sign = -1 factors
// gen - 1; each squared-product factor lands in exactly one variant,
// decided by the parity of its quotient. Requires n >= 1.
Factorization factor_variant(VwKind kind, int n, int sign);

// Value of gen(kind, n) at the roots cos(2*pi*k/d) of Psi_d, always exactly
// +1 or -1 for admissible terms:
//   V, either source:  +1 iff quotient even
//   W, divisor of 2n:  +1 iff quotient even
//   W, divisor of 2n+2: -1 iff quotient even (the flip relative to V)
// Preconditions (else PreconditionViolation): n >= 1; root matches d and is
// a valid spec; source Of2n needs d | 2n with d = 1 or d > 2 for V, d > 1
// for W; source Of2nPlus2 needs d | 2n+2 with d > 2.
int assign_root(VwKind kind, int n, const RootSpec& root, DivisorSource source);

// Every d whose Psi_d divides p exactly over Z, ascending. Candidates are
// filtered by degree (phi(d)/2 <= deg p) and capped at d <= 8*(deg p)^2,
// which is sufficient: phi(d) >= sqrt(d/2) for all d >= 1. Requires p != 0.
std::vector<PsiPoly> psi_divisor_scan(const IntPoly& p);

IntPoly psi_product(const std::vector<PsiPoly>& factors);

// Re-derives everything about a factorization from scratch: regenerates the
// target from the recurrences, recomputes each Psi_d, re-expands the product.
// The stored expansion is never trusted, only compared.
VerifyReport verify(const Factorization& f);

}  // namespace chebfact
