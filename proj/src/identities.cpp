#include "chebfact/identities.hpp"

#include <algorithm>
#include <functional>

#include "chebfact/chebyshev.hpp"
#include "chebfact/factorize.hpp"
#include "chebfact/numtheory.hpp"
#include "chebfact/psi.hpp"

namespace chebfact {

namespace {

// Runs check(n) for n in [1, n_max], recording the first failure.
FamilyResult sweep(const std::string& name, int n_max,
                   const std::function<std::string(int)>& check) {
    FamilyResult result{name, n_max, true, -1, ""};
    for (int n = 1; n <= n_max; ++n) {
        std::string why = check(n);
        if (!why.empty()) {
            result.pass = false;
            result.first_failure = n;
            result.detail = why;
            break;
        }
    }
    return result;
}

std::string check_split_pair(VwKind kind, int n) {
    const Factorization plus = factor_variant(kind, n, +1);
    const Factorization minus = factor_variant(kind, n, -1);
    if (!verify(plus).all_pass()) return "plus variant fails verify";
    if (!verify(minus).all_pass()) return "minus variant fails verify";

    const Factorization squared = factor_squared_minus_one(kind, n);
    if (plus.expanded * minus.expanded != squared.expanded)
        return "variant product differs from the squared split";

    std::vector<long long> combined, whole;
    for (const PsiFactor& f : plus.factors) combined.push_back(f.term.d);
    for (const PsiFactor& f : minus.factors) combined.push_back(f.term.d);
    for (const PsiFactor& f : squared.factors) whole.push_back(f.term.d);
    std::sort(combined.begin(), combined.end());
    std::sort(whole.begin(), whole.end());
    if (combined != whole) return "variant indices do not partition the squared index set";
    if (std::adjacent_find(combined.begin(), combined.end()) != combined.end())
        return "variants share an index";
    return "";
}

}  // namespace

std::vector<FamilyResult> run_identity_suites(const IdentityLimits& limits) {
    std::vector<FamilyResult> results;

    {
        const std::vector<IntPoly> u = gen_U_table(limits.turan + 1);
        const IntPoly one = IntPoly::constant(1);
        results.push_back(sweep("turan", limits.turan, [&](int n) -> std::string {
            const auto& un = u[static_cast<std::size_t>(n)];
            if (un * un - one != u[static_cast<std::size_t>(n - 1)] * u[static_cast<std::size_t>(n + 1)])
                return "U_n^2 - 1 != U_{n-1} U_{n+1}";
            return "";
        }));
    }

    {
        const std::vector<IntPoly> u = gen_U_table(std::max(limits.gurtas - 1, 0));
        results.push_back(sweep("gurtas-product", limits.gurtas, [&](int n) -> std::string {
            IntPoly product = IntPoly::constant(1);
            for (long long d : divisors(2LL * n))
                if (d > 2) product = product * psi(d).poly;
            if (product != u[static_cast<std::size_t>(n - 1)])
                return "Psi product over divisors of 2n differs from U_{n-1}";
            return "";
        }));
    }

    for (VwKind kind : {VwKind::V, VwKind::W}) {
        const std::string prefix = kind == VwKind::V ? "v" : "w";
        results.push_back(sweep(prefix + "-square-split", limits.squared, [&](int n) -> std::string {
            const VerifyReport report = verify(factor_squared_minus_one(kind, n));
            for (const VerifyCheck& c : report.checks)
                if (!c.pass) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
            return "";
        }));
    }

    for (VwKind kind : {VwKind::V, VwKind::W}) {
        const std::string prefix = kind == VwKind::V ? "v" : "w";
        results.push_back(sweep(prefix + "-sign-split", limits.variants,
                                [&](int n) { return check_split_pair(kind, n); }));
    }

    return results;
}

}  // namespace chebfact
