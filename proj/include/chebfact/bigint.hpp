#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace chebfact {

// Arbitrary-precision integers and rationals. cpp_rational keeps values
// reduced with a positive denominator and represents zero as 0/1, which is
// exactly the invariant set the rest of the library assumes.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::lcm(a, b);
}

inline BigInt pow2(unsigned k) {
    return BigInt(1) << k;
}

inline BigInt rat_num(const BigRat& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt rat_den(const BigRat& r) {
    return boost::multiprecision::denominator(r);
}

}  // namespace chebfact
