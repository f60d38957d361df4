#include "chebfact/factorize.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chebfact/chebyshev.hpp"
#include "chebfact/errors.hpp"
#include "chebfact/numtheory.hpp"

namespace chebfact {

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.pass; });
}

namespace {

int root_sign(VwKind kind, DivisorSource source, long long quotient) {
    const bool even = quotient % 2 == 0;
    if (kind == VwKind::W && source == DivisorSource::Of2nPlus2) return even ? -1 : +1;
    return even ? +1 : -1;
}

bool admissible(VwKind kind, DivisorSource source, long long d) {
    if (source == DivisorSource::Of2nPlus2) return d > 2;
    return kind == VwKind::V ? (d == 1 || d > 2) : d > 1;
}

DivisorTerm make_term(long long d, DivisorSource source, long long of) {
    return DivisorTerm{d, source, of / d, (of / d) % 2 == 0 ? Parity::Even : Parity::Odd};
}

// All terms of the squared split, canonical order.
std::vector<DivisorTerm> squared_terms(VwKind kind, int n) {
    if (n < 1) throw PreconditionViolation("factorization requires n >= 1");
    std::vector<DivisorTerm> terms;
    for (long long d : divisors(2LL * n))
        if (admissible(kind, DivisorSource::Of2n, d))
            terms.push_back(make_term(d, DivisorSource::Of2n, 2LL * n));
    for (long long d : divisors(2LL * n + 2))
        if (admissible(kind, DivisorSource::Of2nPlus2, d))
            terms.push_back(make_term(d, DivisorSource::Of2nPlus2, 2LL * n + 2));
    std::sort(terms.begin(), terms.end(), [](const DivisorTerm& a, const DivisorTerm& b) {
        if (a.d != b.d) return a.d < b.d;
        return a.source == DivisorSource::Of2n && b.source == DivisorSource::Of2nPlus2;
    });
    return terms;
}

Factorization assemble(VwKind kind, int n, Variant variant, std::vector<DivisorTerm> terms) {
    Factorization f;
    f.target = FactorTarget{kind, n, variant};
    IntPoly product = IntPoly::constant(1);
    f.factors.reserve(terms.size());
    for (const DivisorTerm& t : terms) {
        PsiFactor factor{psi(t.d), t};
        product = product * factor.psi.poly;
        f.factors.push_back(std::move(factor));
    }
    f.expanded = std::move(product);
    return f;
}

}  // namespace

IntPoly target_poly(const FactorTarget& target) {
    const IntPoly base = target.kind == VwKind::V ? gen_V(target.n) : gen_W(target.n);
    const IntPoly one = IntPoly::constant(1);
    switch (target.variant) {
        case Variant::PlusOne: return base + one;
        case Variant::MinusOne: return base - one;
        case Variant::SquaredMinusOne: return base * base - one;
    }
    throw PreconditionViolation("target_poly: bad variant");
}

Factorization factor_squared_minus_one(VwKind kind, int n) {
    return assemble(kind, n, Variant::SquaredMinusOne, squared_terms(kind, n));
}

Factorization factor_variant(VwKind kind, int n, int sign) {
    if (sign != 1 && sign != -1)
        throw PreconditionViolation("factor_variant: sign must be +1 or -1");
    std::vector<DivisorTerm> picked;
    for (const DivisorTerm& t : squared_terms(kind, n))
        if (root_sign(kind, t.source, t.quotient) == -sign) picked.push_back(t);
    return assemble(kind, n, sign > 0 ? Variant::PlusOne : Variant::MinusOne,
                    std::move(picked));
}

int assign_root(VwKind kind, int n, const RootSpec& root, DivisorSource source) {
    if (n < 1) throw PreconditionViolation("assign_root: n must be >= 1");
    const long long d = root.d;
    if (d < 1) throw PreconditionViolation("assign_root: d must be >= 1");
    const bool valid_k = d <= 2 ? root.k == 1 : (root.k >= 1 && 2 * root.k < d && coprime(root.k, d));
    if (!valid_k) throw PreconditionViolation("assign_root: k does not index a root of Psi_d");
    if (!admissible(kind, source, d))
        throw PreconditionViolation("assign_root: d excluded for this kind and source");
    const long long of = source == DivisorSource::Of2n ? 2LL * n : 2LL * n + 2;
    if (of % d != 0)
        throw PreconditionViolation("assign_root: d does not divide the stated index");
    return root_sign(kind, source, of / d);
}

std::vector<PsiPoly> psi_divisor_scan(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("psi_divisor_scan: zero polynomial");
    std::vector<PsiPoly> found;
    const long long deg = p.degree();
    if (deg < 1) return found;
    const long long cutoff = 8 * deg * deg;
    const auto phi = totient_table(cutoff);
    for (long long d = 1; d <= cutoff; ++d) {
        const long long psi_degree = d <= 2 ? 1 : phi[static_cast<std::size_t>(d)] / 2;
        if (psi_degree > deg) continue;
        PsiPoly candidate = psi(d);
        if (try_div_exact(p, candidate.poly)) found.push_back(std::move(candidate));
    }
    return found;
}

IntPoly psi_product(const std::vector<PsiPoly>& factors) {
    IntPoly product = IntPoly::constant(1);
    for (const PsiPoly& f : factors) product = product * f.poly;
    return product;
}

namespace {

std::string poly_brief(const IntPoly& p) {
    std::string s = "degree " + std::to_string(p.degree());
    if (!p.is_zero()) s += ", leading " + p.leading().str();
    return s;
}

}  // namespace

VerifyReport verify(const Factorization& f) {
    VerifyReport report;
    const FactorTarget& target = f.target;
    const IntPoly expected = target_poly(target);

    bool terms_ok = true;
    std::string term_detail;
    std::set<long long> seen;
    for (const PsiFactor& factor : f.factors) {
        const DivisorTerm& t = factor.term;
        const long long of = t.source == DivisorSource::Of2n ? 2LL * target.n : 2LL * target.n + 2;
        const Parity parity = t.quotient % 2 == 0 ? Parity::Even : Parity::Odd;
        std::string why;
        if (factor.psi.d != t.d) why = "psi index disagrees with term index";
        else if (!admissible(target.kind, t.source, t.d)) why = "d excluded for this kind and source";
        else if (of % t.d != 0 || of / t.d != t.quotient) why = "quotient * d != source index";
        else if (parity != t.parity) why = "stored parity wrong";
        else if (factor.psi.poly != psi(t.d).poly) why = "factor polynomial is not Psi_d";
        else if (target.variant != Variant::SquaredMinusOne &&
                 root_sign(target.kind, t.source, t.quotient) !=
                     (target.variant == Variant::PlusOne ? -1 : +1))
            why = "term belongs to the other sign variant";
        if (!why.empty()) {
            terms_ok = false;
            term_detail = "d = " + std::to_string(t.d) + ": " + why;
            break;
        }
        if (!seen.insert(t.d).second) {
            terms_ok = false;
            term_detail = "d = " + std::to_string(t.d) + " listed twice";
            break;
        }
    }
    report.checks.push_back({"terms", terms_ok, term_detail});

    long long degree_sum = 0;
    BigInt leading_product = 1;
    IntPoly reexpanded = IntPoly::constant(1);
    for (const PsiFactor& factor : f.factors) {
        const IntPoly fresh = psi(factor.term.d).poly;
        degree_sum += fresh.degree();
        leading_product *= fresh.leading();
        reexpanded = reexpanded * fresh;
    }
    report.checks.push_back({"degree sum", degree_sum == expected.degree(),
                             degree_sum == expected.degree()
                                 ? ""
                                 : "factors total " + std::to_string(degree_sum) +
                                       ", target has " + std::to_string(expected.degree())});
    report.checks.push_back(
        {"leading coefficient", !expected.is_zero() && leading_product == expected.leading(),
         !expected.is_zero() && leading_product == expected.leading()
             ? ""
             : "factor leading product " + leading_product.str()});
    report.checks.push_back({"product equals regenerated target", reexpanded == expected,
                             reexpanded == expected ? "" : poly_brief(reexpanded) + " vs " +
                                                               poly_brief(expected)});
    report.checks.push_back({"stored expansion equals regenerated target", f.expanded == expected,
                             f.expanded == expected ? "" : poly_brief(f.expanded) + " vs " +
                                                               poly_brief(expected)});
    return report;
}

}  // namespace chebfact
