#pragma once

#include <string>
#include <vector>

namespace chebfact {

// Upper n for each identity family sweep (all inclusive, starting at 1).
struct IdentityLimits {
    int turan = 1;
    int gurtas = 1;
    int squared = 1;
    int variants = 1;
};

struct FamilyResult {
    std::string name;
    int n_max = 0;
    bool pass = false;
    int first_failure = -1;  // -1 when the family passed
    std::string detail;
};

// Exact batch checks of the identity families, in a fixed order:
//   turan           U_n^2 - 1 = U_{n-1} U_{n+1}
//   gurtas-product  U_{n-1} = prod{d | 2n, d > 2} Psi_d
//   v-square-split  verify(factor_squared_minus_one(V, n))
//   w-square-split  verify(factor_squared_minus_one(W, n))
//   v-sign-split    both variants verify, recombine to the square, and
//                   partition its index set
//   w-sign-split    same for W
// Each family reports its first failing n, if any.
std::vector<FamilyResult> run_identity_suites(const IdentityLimits& limits);

}  // namespace chebfact
