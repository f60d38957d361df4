#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "chebfact/chebyshev.hpp"
#include "chebfact/errors.hpp"
#include "chebfact/factorize.hpp"
#include "chebfact/numtheory.hpp"
#include "support/golden.hpp"
#include "support/mp_eval.hpp"

using namespace chebfact;
using golden::ipoly;

namespace {

std::vector<long long> indices(const Factorization& f) {
    std::vector<long long> out;
    out.reserve(f.factors.size());
    for (const auto& factor : f.factors) out.push_back(factor.term.d);
    return out;
}

IntPoly gen_vw(VwKind kind, int n) { return kind == VwKind::V ? gen_V(n) : gen_W(n); }

}  // namespace

TEST_CASE("pinned factor index lists") {
    for (const auto& fc : golden::kFactorCases) {
        CAPTURE(fc.n);
        CAPTURE(fc.sign);
        const Factorization f = factor_variant(fc.kind, fc.n, fc.sign);
        CHECK(indices(f) == fc.ds);
        CHECK(verify(f).all_pass());
    }
}

TEST_CASE("factor lists stay sorted and expansion matches the target") {
    for (VwKind kind : {VwKind::V, VwKind::W}) {
        for (int n = 1; n <= 40; ++n) {
            const IntPoly base = gen_vw(kind, n);
            const IntPoly one = IntPoly::constant(1);

            const Factorization plus = factor_variant(kind, n, +1);
            const Factorization minus = factor_variant(kind, n, -1);
            const Factorization square = factor_squared_minus_one(kind, n);

            CHECK(plus.expanded == base + one);
            CHECK(minus.expanded == base - one);
            CHECK(square.expanded == base * base - one);
            CHECK(plus.expanded * minus.expanded == square.expanded);

            // multiset split of the squared factor list, nothing shared
            std::vector<long long> combined = indices(plus);
            for (long long d : indices(minus)) combined.push_back(d);
            std::sort(combined.begin(), combined.end());
            CHECK(combined == indices(square));
            CHECK(std::adjacent_find(combined.begin(), combined.end()) == combined.end());

            // degree and leading coefficient of the sign variants
            long long degree_sum = 0;
            for (const auto& factor : plus.factors) degree_sum += factor.psi.poly.degree();
            for (const auto& factor : minus.factors) degree_sum += factor.psi.poly.degree();
            CHECK(degree_sum == 2 * n);
            CHECK(plus.expanded.leading() == pow2(static_cast<unsigned>(n)));
            CHECK(minus.expanded.leading() == pow2(static_cast<unsigned>(n)));
        }
    }
}

TEST_CASE("smallest cases") {
    const Factorization v1m = factor_variant(VwKind::V, 1, -1);
    CHECK(indices(v1m) == std::vector<long long>{1});
    CHECK(v1m.expanded == ipoly({-2, 2}));

    const Factorization v1p = factor_variant(VwKind::V, 1, +1);
    CHECK(indices(v1p) == std::vector<long long>{4});
    CHECK(v1p.expanded == ipoly({0, 2}));

    const Factorization w1p = factor_variant(VwKind::W, 1, +1);
    CHECK(indices(w1p) == std::vector<long long>{2});
    const Factorization w1m = factor_variant(VwKind::W, 1, -1);
    CHECK(indices(w1m) == std::vector<long long>{4});

    CHECK_THROWS_AS(factor_variant(VwKind::V, 0, +1), PreconditionViolation);
    CHECK_THROWS_AS(factor_variant(VwKind::V, 2, 0), PreconditionViolation);
    CHECK_THROWS_AS(factor_squared_minus_one(VwKind::W, -3), PreconditionViolation);
}

TEST_CASE("divisor bookkeeping on the factors") {
    const Factorization f = factor_squared_minus_one(VwKind::V, 12);
    for (const auto& factor : f.factors) {
        const long long total = factor.term.source == DivisorSource::Of2n ? 24 : 26;
        CHECK(total % factor.term.d == 0);
        CHECK(factor.term.quotient == total / factor.term.d);
        CHECK((factor.term.parity == Parity::Even) == (factor.term.quotient % 2 == 0));
        CHECK(factor.psi.d == factor.term.d);
    }
}

TEST_CASE("root values match high-precision evaluation, n <= 40") {
    for (VwKind kind : {VwKind::V, VwKind::W}) {
        for (int n = 1; n <= 40; ++n) {
            const IntPoly base = gen_vw(kind, n);
            for (DivisorSource source : {DivisorSource::Of2n, DivisorSource::Of2nPlus2}) {
                const long long total = source == DivisorSource::Of2n ? 2LL * n : 2LL * n + 2;
                for (long long d : divisors(total)) {
                    const bool admissible = source == DivisorSource::Of2n
                                                ? (kind == VwKind::V ? (d == 1 || d > 2) : d > 1)
                                                : d > 2;
                    if (!admissible) continue;
                    for (const RootSpec& r : psi_roots(d)) {
                        const int sign = assign_root(kind, n, r, source);
                        CHECK((sign == 1 || sign == -1));
                        const mp::Real value = mp::eval_poly(base, mp::cos_frac(r.k, r.d));
                        if (abs(value - sign) > mp::Real("1e-6")) {
                            CAPTURE(n);
                            CAPTURE(d);
                            CAPTURE(r.k);
                            CHECK(abs(value - sign) <= mp::Real("1e-6"));
                        }
                    }
                }
            }
        }
    }
    CHECK(true);
}

TEST_CASE("root assignment rejects bad input") {
    CHECK_THROWS_AS(assign_root(VwKind::V, 12, RootSpec{2, 1}, DivisorSource::Of2n),
                    PreconditionViolation);  // d = 2 never belongs to V
    CHECK_THROWS_AS(assign_root(VwKind::W, 12, RootSpec{1, 1}, DivisorSource::Of2n),
                    PreconditionViolation);  // d = 1 never belongs to W
    CHECK_THROWS_AS(assign_root(VwKind::V, 12, RootSpec{5, 1}, DivisorSource::Of2n),
                    PreconditionViolation);  // 5 does not divide 24
    CHECK_THROWS_AS(assign_root(VwKind::V, 12, RootSpec{1, 1}, DivisorSource::Of2nPlus2),
                    PreconditionViolation);  // specials only ride the 2n side
    CHECK_THROWS_AS(assign_root(VwKind::V, 12, RootSpec{8, 2}, DivisorSource::Of2n),
                    PreconditionViolation);  // k must be coprime to d
    CHECK_THROWS_AS(assign_root(VwKind::V, 12, RootSpec{8, 5}, DivisorSource::Of2n),
                    PreconditionViolation);  // k must stay below d/2
    CHECK_THROWS_AS(assign_root(VwKind::V, 0, RootSpec{4, 1}, DivisorSource::Of2n),
                    PreconditionViolation);

    CHECK(assign_root(VwKind::V, 12, RootSpec{8, 1}, DivisorSource::Of2n) == -1);
    CHECK(assign_root(VwKind::V, 12, RootSpec{12, 1}, DivisorSource::Of2n) == 1);
    // Psi_26 sits in the minus list of W_12, so W_12 is +1 on its roots
    CHECK(assign_root(VwKind::W, 12, RootSpec{26, 3}, DivisorSource::Of2nPlus2) == 1);
}

TEST_CASE("divisor scan") {
    // round trip: the second kind is the full product over divisors of 2n
    for (int n = 1; n <= 60; ++n) {
        std::vector<long long> expect;
        for (long long d : divisors(2LL * n))
            if (d > 2) expect.push_back(d);
        const IntPoly u = gen_U(n - 1);
        if (u.degree() < 1) {
            CHECK(expect.empty());
            continue;
        }
        std::vector<long long> got;
        for (const PsiPoly& p : psi_divisor_scan(u)) got.push_back(p.d);
        if (got != expect) {
            CAPTURE(n);
            CHECK(got == expect);
        }
    }
    CHECK(true);

    // a degree-1 polynomial can hide a divisor with d as large as 4: 2x is
    // the d = 4 entry itself, so the cap has to reach past 2*(deg)^2
    const auto scan_2x = psi_divisor_scan(ipoly({0, 2}));
    REQUIRE(scan_2x.size() == 1);
    CHECK(scan_2x[0].d == 4);

    const auto both = psi_divisor_scan(psi(7).poly * psi(9).poly);
    REQUIRE(both.size() == 2);
    CHECK(both[0].d == 7);
    CHECK(both[1].d == 9);
    CHECK(psi_product(both) == psi(7).poly * psi(9).poly);

    CHECK(psi_divisor_scan(IntPoly::constant(5)).empty());
    CHECK_THROWS_AS(psi_divisor_scan(IntPoly::zero()), ZeroPolynomial);
    CHECK(psi_product({}).coefficients() == std::vector<BigInt>{1});
}

TEST_CASE("no divisors at index five of the fifth and sixth kinds") {
    const IntPoly one = IntPoly::constant(1);
    for (ChebKind kind : {ChebKind::X, ChebKind::Y}) {
        const IntPoly p = gen_int(kind, 5);
        CHECK(psi_divisor_scan(p + one).empty());
        CHECK(psi_divisor_scan(p - one).empty());
    }
}

TEST_CASE("scan rows for the fifth kind, plus side, n <= 6") {
    for (const auto& row : golden::kScanXPlus) {
        const IntPoly p = gen_int(ChebKind::X, row.n) + IntPoly::constant(1);
        std::vector<long long> got;
        for (const PsiPoly& f : psi_divisor_scan(p)) got.push_back(f.d);
        CAPTURE(row.n);
        CHECK(got == row.ds);
        CHECK((psi_product(psi_divisor_scan(p)) == p) == row.complete);
    }
}

TEST_CASE("verification catches tampering") {
    Factorization f = factor_variant(VwKind::V, 12, +1);
    REQUIRE(verify(f).all_pass());

    SUBCASE("swapped factor polynomial") {
        f.factors[0].psi.poly = psi(5).poly;
        const VerifyReport report = verify(f);
        CHECK(!report.all_pass());
    }
    SUBCASE("dropped factor") {
        f.factors.pop_back();
        CHECK(!verify(f).all_pass());
    }
    SUBCASE("stored expansion rewritten") {
        f.expanded = f.expanded + IntPoly::constant(1);
        const VerifyReport report = verify(f);
        bool expansion_check_failed = false;
        for (const auto& c : report.checks)
            if (!c.pass && c.name.find("stored expansion") != std::string::npos)
                expansion_check_failed = true;
        CHECK(expansion_check_failed);
    }
    SUBCASE("wrong side") {
        f.target.variant = Variant::MinusOne;
        CHECK(!verify(f).all_pass());
    }
}

TEST_CASE("target regeneration") {
    CHECK(target_poly({VwKind::V, 3, Variant::PlusOne}) == gen_V(3) + IntPoly::constant(1));
    CHECK(target_poly({VwKind::W, 3, Variant::MinusOne}) == gen_W(3) - IntPoly::constant(1));
    CHECK(target_poly({VwKind::W, 2, Variant::SquaredMinusOne}) ==
          gen_W(2) * gen_W(2) - IntPoly::constant(1));
}
