#ifndef POLYGRAPH_NUMTHEORY_HPP
#define POLYGRAPH_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace polygraph {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(u64 n);

// Prime factorization (trial division + Pollard-Brent rho),
// as (prime, exponent) pairs with primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

u64 euler_phi(u64 n);

// n = p^k with p prime and k >= 2?
bool is_proper_prime_power(u64 n);

inline u64 largest_odd_divisor(u64 n) {
    while (n && (n & 1) == 0) n >>= 1;
    return n;
}

}  // namespace polygraph

#endif
