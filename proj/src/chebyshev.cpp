#include "chebfact/chebyshev.hpp"

#include <string>

#include "chebfact/errors.hpp"

namespace chebfact {

namespace {

const IntPoly kTwoX(std::vector<BigInt>{0, 2});

void require_nonnegative(int n, const char* who) {
    if (n < 0) throw PreconditionViolation(std::string(who) + ": n must be >= 0");
}

}  // namespace

IntPoly gen_U(int n) {
    require_nonnegative(n, "gen_U");
    IntPoly prev = IntPoly::constant(1);
    if (n == 0) return prev;
    IntPoly cur = kTwoX;
    for (int k = 2; k <= n; ++k) {
        IntPoly next = kTwoX * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::vector<IntPoly> gen_U_table(int n) {
    require_nonnegative(n, "gen_U_table");
    std::vector<IntPoly> table;
    table.reserve(static_cast<std::size_t>(n) + 1);
    table.push_back(IntPoly::constant(1));
    if (n >= 1) table.push_back(kTwoX);
    for (int k = 2; k <= n; ++k)
        table.push_back(kTwoX * table[static_cast<std::size_t>(k - 1)] -
                        table[static_cast<std::size_t>(k - 2)]);
    return table;
}

IntPoly gen_V(int n) {
    require_nonnegative(n, "gen_V");
    if (n == 0) return IntPoly::constant(1);
    return gen_U(n) - gen_U(n - 1);
}

IntPoly gen_W(int n) {
    require_nonnegative(n, "gen_W");
    if (n == 0) return IntPoly::constant(1);
    return gen_U(n) + gen_U(n - 1);
}

namespace {

BigRat coeff_A(int n, int m) {
    const long long sign = (n % 2 == 0) ? 1 : -1;
    const BigInt num = BigInt(2 * n + m - 2) * sign + BigInt(2 * n - (m - 2)) -
                       BigInt(n) * m - BigInt(n) * n;
    const BigInt den = BigInt(2 * n + m - 1) * BigInt(2 * n + m - 3);
    if (den == 0)
        throw DenominatorZero("gen_G: A(" + std::to_string(n) + ", " + std::to_string(m) +
                              ") has zero denominator");
    return BigRat(num, den);
}

}  // namespace

RatPoly gen_G(GIndex idx) {
    require_nonnegative(idx.n, "gen_G");
    RatPoly prev = RatPoly::constant(1);
    if (idx.n == 0) return prev;
    RatPoly cur = RatPoly::variable();
    for (int k = 2; k <= idx.n; ++k) {
        RatPoly next = RatPoly::variable() * cur + prev * coeff_A(k - 1, idx.m);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

IntPoly gen_XY(ChebKind kind, int n) {
    if (kind != ChebKind::X && kind != ChebKind::Y)
        throw PreconditionViolation("gen_XY: kind must be X or Y");
    return clear_denominators(gen_G({n, kind == ChebKind::X ? 3 : 5}));
}

IntPoly gen_int(ChebKind kind, int n) {
    switch (kind) {
        case ChebKind::U: return gen_U(n);
        case ChebKind::V: return gen_V(n);
        case ChebKind::W: return gen_W(n);
        case ChebKind::X:
        case ChebKind::Y: return gen_XY(kind, n);
        default: throw PreconditionViolation("gen_int: kind has no integer form");
    }
}

}  // namespace chebfact
