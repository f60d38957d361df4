#pragma once

#include <cstdint>
#include <vector>

namespace chebfact {

// Divisors of n in ascending order. Requires n >= 1.
std::vector<long long> divisors(long long n);

// Euler's totient. Requires n >= 1.
long long totient(long long n);

// totient(d) for every d in [0, limit]; index 0 holds 0. Sieve, O(limit log log limit).
std::vector<long long> totient_table(long long limit);

bool coprime(long long a, long long b);

}  // namespace chebfact
