#ifndef POLYGRAPH_LEMMAS_HPP
#define POLYGRAPH_LEMMAS_HPP

#include <string>

#include "polygraph/poly.hpp"

namespace polygraph {

// Outcome of one instance check. `counterexample` holds a minimal reproducer
// for the first failing case; a failure indicates an implementation bug, not
// a false statement.
struct LemmaReport {
    std::string name;
    u64 checks = 0;
    bool pass = true;
    std::string counterexample;
};

// twist_poly(d, k+h, gamma) == twist_poly(d, h, gamma) modulo
// twist_poly(d, k, delta), for 1 <= k <= K, 1 <= h <= H and all gamma, delta
// in the order-gcd(d, p-1) root group.
LemmaReport check_iterate_congruence(const Field& F, u64 d, u64 K, u64 H);

// monic(gcd(twist_k, twist_m)) == monic(twist_gcd(k, m)), 1 <= k, m <= K.
LemmaReport check_iterate_gcd(const Field& F, u64 d, u64 K);

// For d = 2 over odd p: no product of twist_poly(2, j, -1) over a non-empty
// subset of {1..M} is a perfect square.
LemmaReport check_products_not_square(const Field& F, u64 M);

// For d >= 3 with gcd(d-1, p) = 1 and e = gcd(d, p-1) >= 2: products
// prod_{j=2..J} prod_{gamma != 1} twist_poly(d, j, gamma)^alpha with exponent
// collections alpha in {0..e-1}, not all zero, are never perfect e-th powers.
// Checks the all-ones collection plus `samples` seeded random collections.
LemmaReport check_products_not_eth_power(const Field& F, u64 d, u64 J, u64 samples, u64 seed);

}  // namespace polygraph

#endif
