#ifndef POLYGRAPH_FIELD_HPP
#define POLYGRAPH_FIELD_HPP

#include <map>
#include <mutex>
#include <vector>

#include "polygraph/errors.hpp"
#include "polygraph/numtheory.hpp"

namespace polygraph {

// Arithmetic context for the prime field F_p. Elements are plain uint64_t
// residues; every operation takes canonical inputs in [0, p) and returns a
// canonical result. Construction rejects composite moduli.
//
// The object is logically immutable after construction. The root-of-unity
// cache is filled lazily under a mutex, so a single Field can be shared
// across threads.
class Field {
public:
    explicit Field(u64 p);

    u64 modulus() const noexcept { return p_; }

    u64 reduce(u64 x) const noexcept { return x % p_; }

    u64 add(u64 a, u64 b) const noexcept {
        const u64 t = p_ - b;
        return a >= t ? a - t : a + b;
    }

    u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + (p_ - b); }

    u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }

    u64 mul(u64 a, u64 b) const noexcept { return mulmod(a, b, p_); }

    u64 pow(u64 a, u64 e) const noexcept { return powmod(a, e, p_); }

    // Fermat inverse; throws DivisionByZeroError on 0.
    u64 inv(u64 a) const {
        if (a == 0) throw DivisionByZeroError();
        return pow(a, p_ - 2);
    }

    // All solutions of x^e = 1, ascending. Exactly gcd(e, p-1) of them.
    const std::vector<u64>& roots_of_unity(u64 e) const;

    // True iff x = z^e has a solution; 0 counts (z = 0).
    bool is_eth_power(u64 x, u64 e) const;

    // One representative per coset of H_m = { y^m : y in F_p^* }: the smallest
    // member of each coset, listed ascending. gcd(m, p-1) entries.
    std::vector<u64> power_coset_representatives(u64 m) const;

    // A fixed generator of F_p^* (1 when p = 2).
    u64 generator() const noexcept { return generator_; }

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

private:
    u64 p_;
    u64 generator_;
    mutable std::mutex cache_mutex_;
    mutable std::map<u64, std::vector<u64>> unity_cache_;  // keyed by gcd(e, p-1)
};

}  // namespace polygraph

#endif
