#include "chebfact/psi.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <numeric>

#include "chebfact/errors.hpp"
#include "chebfact/numtheory.hpp"

namespace chebfact {

double RootSpec::theta() const {
    return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d);
}

double RootSpec::cos_value() const {
    return std::cos(theta());
}

namespace {

class PsiTable {
public:
    static PsiTable& instance() {
        static PsiTable table;
        return table;
    }

    IntPoly cyclotomic(long long d) {
        std::lock_guard<std::mutex> lock(mu_);
        return cyclotomic_locked(d);
    }

    IntPoly psi(long long d) {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto it = psi_.find(d); it != psi_.end()) return it->second;
        IntPoly value = compute_psi_locked(d);
        psi_.emplace(d, value);
        return value;
    }

    void preload(long long d, const IntPoly& poly) {
        std::string defect = psi_entry_defect(d, poly);
        if (!defect.empty())
            throw PreconditionViolation("psi_preload(" + std::to_string(d) + "): " + defect);
        std::lock_guard<std::mutex> lock(mu_);
        auto [it, inserted] = psi_.emplace(d, poly);
        if (!inserted && it->second != poly)
            throw InternalInconsistency("psi_preload(" + std::to_string(d) +
                                        "): entry disagrees with computed value");
    }

    std::map<long long, IntPoly> snapshot() {
        std::lock_guard<std::mutex> lock(mu_);
        return psi_;
    }

private:
    IntPoly cyclotomic_locked(long long d) {
        if (d < 1) throw PreconditionViolation("cyclotomic: d must be >= 1");
        if (auto it = cyclo_.find(d); it != cyclo_.end()) return it->second;
        // x^d - 1 over the product of the proper-divisor cyclotomics.
        std::vector<BigInt> xd(static_cast<std::size_t>(d) + 1, 0);
        xd[0] = -1;
        xd[static_cast<std::size_t>(d)] = 1;
        IntPoly result(std::move(xd));
        for (long long e : divisors(d))
            if (e != d) result = div_exact(result, cyclotomic_locked(e));
        cyclo_.emplace(d, result);
        return result;
    }

    // Fold the palindromic cyclotomic through z^j + z^-j = B_j(z + 1/z),
    // B_1 = y, B_2 = y^2 - 2, B_j = y*B_{j-1} - B_{j-2}, then substitute
    // y = 2x. The reconstruction check below is exactly "the fold left no
    // residue": it fails iff the lower coefficient half was not the mirror
    // of the upper half consumed by the fold.
    IntPoly compute_psi_locked(long long d) {
        if (d == 1) return IntPoly(std::vector<BigInt>{-2, 2});
        if (d == 2) return IntPoly(std::vector<BigInt>{2, 2});
        const long long phi = totient(d);
        const long long m = phi / 2;
        const IntPoly cyclo = cyclotomic_locked(d);
        if (phi % 2 != 0 || cyclo.degree() != phi)
            throw InternalInconsistency("psi(" + std::to_string(d) + "): bad cyclotomic degree");

        std::vector<IntPoly> basis;  // basis[j] = B_j in y
        basis.push_back(IntPoly::constant(2));
        basis.push_back(IntPoly::variable());
        for (long long j = 2; j <= m; ++j)
            basis.push_back(IntPoly::variable() * basis[static_cast<std::size_t>(j - 1)] -
                            basis[static_cast<std::size_t>(j - 2)]);

        IntPoly folded = IntPoly::constant(cyclo.coeff(static_cast<std::size_t>(m)));
        std::vector<BigInt> rebuilt(static_cast<std::size_t>(2 * m) + 1, 0);
        rebuilt[static_cast<std::size_t>(m)] = cyclo.coeff(static_cast<std::size_t>(m));
        for (long long j = 1; j <= m; ++j) {
            const BigInt c = cyclo.coeff(static_cast<std::size_t>(m + j));
            folded = folded + basis[static_cast<std::size_t>(j)] * c;
            rebuilt[static_cast<std::size_t>(m + j)] = c;
            rebuilt[static_cast<std::size_t>(m - j)] = c;
        }
        if (IntPoly(std::move(rebuilt)) != cyclo)
            throw InternalInconsistency("psi(" + std::to_string(d) +
                                        "): palindrome fold left a nonzero residue");

        std::vector<BigInt> out(folded.coefficients());
        for (std::size_t k = 0; k < out.size(); ++k) out[k] <<= k;  // y -> 2x
        return IntPoly(std::move(out));
    }

    std::mutex mu_;
    std::map<long long, IntPoly> cyclo_;
    std::map<long long, IntPoly> psi_;
};

}  // namespace

IntPoly cyclotomic(long long d) {
    return PsiTable::instance().cyclotomic(d);
}

PsiPoly psi(long long d) {
    if (d < 1) throw PreconditionViolation("psi: d must be >= 1");
    return PsiPoly{d, PsiTable::instance().psi(d)};
}

std::vector<RootSpec> psi_roots(long long d) {
    if (d < 1) throw PreconditionViolation("psi_roots: d must be >= 1");
    if (d <= 2) return {RootSpec{d, 1}};
    std::vector<RootSpec> roots;
    for (long long k = 1; 2 * k < d; ++k)
        if (coprime(k, d)) roots.push_back(RootSpec{d, k});
    return roots;
}

std::string psi_entry_defect(long long d, const IntPoly& poly) {
    if (d < 1) return "index must be >= 1";
    if (d <= 2) {
        const IntPoly expected(std::vector<BigInt>{d == 1 ? -2 : 2, 2});
        if (poly != expected)
            return d == 1 ? "expected the exact constants of 2x - 2"
                          : "expected the exact constants of 2x + 2";
        return "";
    }
    const long long m = totient(d) / 2;
    if (poly.degree() != m)
        return "degree " + std::to_string(poly.degree()) + ", expected " + std::to_string(m);
    if (poly.leading() != pow2(static_cast<unsigned>(m)))
        return "leading coefficient is not 2^" + std::to_string(m);
    double norm = 0.0;
    for (const auto& c : poly.coefficients())
        norm = std::max(norm, std::abs(c.convert_to<double>()));
    const double residual = std::abs(eval_real(poly, RootSpec{d, 1}.cos_value()));
    if (residual > 1e-6 * (1.0 + norm))
        return "does not vanish at cos(2*pi/" + std::to_string(d) + ")";
    return "";
}

void psi_preload(long long d, const IntPoly& poly) {
    PsiTable::instance().preload(d, poly);
}

std::map<long long, IntPoly> psi_snapshot() {
    return PsiTable::instance().snapshot();
}

}  // namespace chebfact
