#pragma once

#include <vector>

#include "chebfact/poly.hpp"

namespace chebfact {

// The seven generated families. U, V, W, X, Y are integer polynomials; Xbar
// and Ybar are the monic rational forms X and Y are derived from.
enum class ChebKind { U, V, W, X, Y, Xbar, Ybar };

// Index into the rational recurrence behind the fifth (m = 3) and sixth
// (m = 5) kinds.
struct GIndex {
    int n = 0;
    int m = 3;
};

// Second kind: U_0 = 1, U_1 = 2x, U_n = 2x*U_{n-1} - U_{n-2}. Requires n >= 0.
IntPoly gen_U(int n);

// U_0..U_n in one pass; cheaper than n calls to gen_U inside sweeps.
std::vector<IntPoly> gen_U_table(int n);

// Third kind V_n = U_n - U_{n-1} and fourth kind W_n = U_n + U_{n-1},
// with U_{-1} = 0 so that V_0 = W_0 = 1. Requires n >= 0.
IntPoly gen_V(int n);
IntPoly gen_W(int n);

// Monic rational recurrence G_0 = 1, G_1 = x,
// G_n = x*G_{n-1} + A(n-1, m)*G_{n-2}, where
// A(n, m) = ((2n+m-2)(-1)^n + (2n-(m-2)) - nm - n^2) / ((2n+m-1)(2n+m-3)).
// Requires idx.n >= 0. Throws DenominatorZero if a visited A(k, m) has a zero
// denominator (never happens for m in {3, 5}).
RatPoly gen_G(GIndex idx);

// Integer fifth/sixth kinds: clear_denominators(gen_G(n, 3)) for X and
// clear_denominators(gen_G(n, 5)) for Y. kind must be X or Y.
IntPoly gen_XY(ChebKind kind, int n);

// Dispatch over the five integer kinds. kind must not be Xbar or Ybar.
IntPoly gen_int(ChebKind kind, int n);

}  // namespace chebfact
