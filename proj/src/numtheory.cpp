#include "chebfact/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "chebfact/errors.hpp"

namespace chebfact {

std::vector<long long> divisors(long long n) {
    if (n < 1) throw PreconditionViolation("divisors: n must be >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long long totient(long long n) {
    if (n < 1) throw PreconditionViolation("totient: n must be >= 1");
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long long> totient_table(long long limit) {
    if (limit < 0) throw PreconditionViolation("totient_table: limit must be >= 0");
    std::vector<long long> phi(static_cast<std::size_t>(limit) + 1);
    std::iota(phi.begin(), phi.end(), 0LL);
    for (long long p = 2; p <= limit; ++p) {
        if (phi[static_cast<std::size_t>(p)] != p) continue;  // p not prime
        for (long long k = p; k <= limit; k += p)
            phi[static_cast<std::size_t>(k)] -= phi[static_cast<std::size_t>(k)] / p;
    }
    return phi;
}

bool coprime(long long a, long long b) {
    return std::gcd(a, b) == 1;
}

}  // namespace chebfact
