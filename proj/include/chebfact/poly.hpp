#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "chebfact/bigint.hpp"
#include "chebfact/errors.hpp"

namespace chebfact {

// Dense univariate polynomial, coefficients stored ascending by degree.
// Canonical form: the empty vector is the zero polynomial, and a nonempty
// vector never ends in a zero. Every operation returns canonical values and
// nothing mutates a polynomial after construction.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(Coeff v) {
        return Polynomial(std::vector<Coeff>{std::move(v)});
    }

    // The monomial x.
    static Polynomial variable() {
        return Polynomial(std::vector<Coeff>{Coeff(0), Coeff(1)});
    }

    bool is_zero() const { return c_.empty(); }

    // degree(0) = -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    // Coefficient of x^i; zero beyond the stored degree.
    Coeff coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : Coeff(0);
    }

    const Coeff& leading() const {
        if (c_.empty()) throw ZeroPolynomial("leading(): zero polynomial");
        return c_.back();
    }

    const std::vector<Coeff>& coefficients() const { return c_; }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

private:
    std::vector<Coeff> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<BigRat>;

template <typename Coeff>
Polynomial<Coeff> operator+(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
    std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    std::vector<Coeff> out(n, Coeff(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(i) + b.coeff(i);
    return Polynomial<Coeff>(std::move(out));
}

template <typename Coeff>
Polynomial<Coeff> operator-(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
    std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
    std::vector<Coeff> out(n, Coeff(0));
    for (std::size_t i = 0; i < n; ++i) out[i] = a.coeff(i) - b.coeff(i);
    return Polynomial<Coeff>(std::move(out));
}

template <typename Coeff>
Polynomial<Coeff> operator-(const Polynomial<Coeff>& a) {
    std::vector<Coeff> out(a.coefficients());
    for (auto& v : out) v = -v;
    return Polynomial<Coeff>(std::move(out));
}

// Schoolbook product. Degrees stay in the hundreds here, so the quadratic
// algorithm is the simple and fast-enough choice.
template <typename Coeff>
Polynomial<Coeff> operator*(const Polynomial<Coeff>& a, const Polynomial<Coeff>& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial<Coeff>::zero();
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<Coeff> out(ac.size() + bc.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
    }
    return Polynomial<Coeff>(std::move(out));
}

template <typename Coeff>
Polynomial<Coeff> operator*(const Polynomial<Coeff>& a, const Coeff& s) {
    std::vector<Coeff> out(a.coefficients());
    for (auto& v : out) v *= s;
    return Polynomial<Coeff>(std::move(out));
}

template <typename Coeff>
Polynomial<Coeff> operator*(const Coeff& s, const Polynomial<Coeff>& a) {
    return a * s;
}

namespace detail {

// Exact coefficient quotient, or nullopt when it does not exist in the ring.
inline std::optional<BigInt> exact_coeff_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) return std::nullopt;
    return q;
}

inline std::optional<BigRat> exact_coeff_div(const BigRat& a, const BigRat& b) {
    return a / b;  // field: always exact
}

}  // namespace detail

// Exact long division without the throw: nullopt when no quotient exists
// over the coefficient ring (nonzero remainder, or an integer
// leading-coefficient division that fails). Divisor must be nonzero.
template <typename Coeff>
std::optional<Polynomial<Coeff>> try_div_exact(const Polynomial<Coeff>& p,
                                               const Polynomial<Coeff>& divisor) {
    if (divisor.is_zero()) throw ZeroPolynomial("try_div_exact: divisor is the zero polynomial");
    if (p.is_zero()) return Polynomial<Coeff>::zero();
    if (p.degree() < divisor.degree()) return std::nullopt;

    std::vector<Coeff> rem(p.coefficients());
    const auto& dc = divisor.coefficients();
    const int dd = divisor.degree();
    std::vector<Coeff> quot(static_cast<std::size_t>(p.degree() - dd) + 1, Coeff(0));

    int rd = p.degree();
    while (rd >= dd) {
        auto c = detail::exact_coeff_div(rem[static_cast<std::size_t>(rd)], dc.back());
        if (!c) return std::nullopt;
        const int k = rd - dd;
        quot[static_cast<std::size_t>(k)] = *c;
        for (int i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= *c * dc[static_cast<std::size_t>(i)];
        while (rd >= 0 && rem[static_cast<std::size_t>(rd)] == 0) --rd;
    }
    for (int i = 0; i <= rd; ++i)
        if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
    return Polynomial<Coeff>(std::move(quot));
}

// As try_div_exact, but a missing quotient is a caller bug: throws
// NotDivisible instead of returning nullopt.
template <typename Coeff>
Polynomial<Coeff> div_exact(const Polynomial<Coeff>& p, const Polynomial<Coeff>& divisor) {
    if (divisor.is_zero()) throw NotDivisible("div_exact: divisor is the zero polynomial");
    auto q = try_div_exact(p, divisor);
    if (!q) throw NotDivisible("div_exact: no exact quotient");
    return std::move(*q);
}

// Horner evaluation in double precision. No stabilization is attempted;
// callers own the tolerance policy and must budget for the coefficient scale.
template <typename Coeff>
double eval_real(const Polynomial<Coeff>& p, double t) {
    double acc = 0.0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * t + c[i].template convert_to<double>();
    return acc;
}

// Exact Horner evaluation at a rational point.
inline BigRat eval_rat(const IntPoly& p, const BigRat& t) {
    BigRat acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + BigRat(c[i]);
    return acc;
}

inline BigRat eval_rat(const RatPoly& p, const BigRat& t) {
    BigRat acc = 0;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
    return acc;
}

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<BigRat> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return RatPoly(std::move(out));
}

// Positive gcd of all coefficients of a nonzero integer polynomial.
inline BigInt content(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("content: zero polynomial");
    BigInt g = 0;
    for (const auto& c : p.coefficients()) g = big_gcd(g, c);
    return boost::multiprecision::abs(g);
}

// Smallest positive integer multiple of p that is an integer polynomial with
// coprime coefficients and positive leading coefficient: multiply by the lcm
// of the denominators, divide by the gcd of the results, fix the sign.
inline IntPoly clear_denominators(const RatPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("clear_denominators: zero polynomial");
    BigInt lcm = 1;
    for (const auto& c : p.coefficients()) lcm = big_lcm(lcm, rat_den(c));
    std::vector<BigInt> scaled;
    scaled.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        BigRat v = c * BigRat(lcm);
        scaled.push_back(rat_num(v));  // exact by construction of lcm
    }
    BigInt g = 0;
    for (const auto& c : scaled) g = big_gcd(g, c);
    g = boost::multiprecision::abs(g);
    if (scaled.back() < 0) g = -g;
    for (auto& c : scaled) c /= g;
    return IntPoly(std::move(scaled));
}

}  // namespace chebfact
