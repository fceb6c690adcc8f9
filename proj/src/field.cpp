#include "polygraph/field.hpp"

#include <algorithm>
#include <numeric>

namespace polygraph {

namespace {

u64 find_generator(u64 p) {
    if (p == 2) return 1;
    const auto factors = factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, k] : factors) {
            (void)k;
            if (powmod(g, (p - 1) / q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    return 0;  // unreachable for prime p
}

}  // namespace

Field::Field(u64 p) : p_(p) {
    if (p < 2) throw PreconditionError("field modulus must be >= 2");
    if (!is_prime(p)) throw NotPrimeError(p, is_proper_prime_power(p));
    generator_ = find_generator(p);
}

const std::vector<u64>& Field::roots_of_unity(u64 e) const {
    if (e == 0) throw PreconditionError("exponent must be >= 1");
    const u64 t = std::gcd(e, p_ - 1);
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = unity_cache_.find(t);
    if (it != unity_cache_.end()) return it->second;
    std::vector<u64> roots;
    roots.reserve(t);
    const u64 zeta = pow(generator_, (p_ - 1) / t);
    u64 x = 1;
    for (u64 i = 0; i < t; ++i) {
        roots.push_back(x);
        x = mul(x, zeta);
    }
    std::sort(roots.begin(), roots.end());
    return unity_cache_.emplace(t, std::move(roots)).first->second;
}

bool Field::is_eth_power(u64 x, u64 e) const {
    if (e == 0) throw PreconditionError("exponent must be >= 1");
    if (x == 0) return true;
    const u64 t = std::gcd(e, p_ - 1);
    return pow(x, (p_ - 1) / t) == 1;
}

std::vector<u64> Field::power_coset_representatives(u64 m) const {
    if (m == 0) throw PreconditionError("exponent must be >= 1");
    const u64 t = std::gcd(m, p_ - 1);
    const u64 index_exp = (p_ - 1) / t;
    std::vector<u64> reps, inv_reps;
    reps.reserve(t);
    inv_reps.reserve(t);
    for (u64 x = 1; x < p_ && reps.size() < t; ++x) {
        bool fresh = true;
        for (u64 ir : inv_reps) {
            if (pow(mul(x, ir), index_exp) == 1) {
                fresh = false;
                break;
            }
        }
        if (fresh) {
            reps.push_back(x);
            inv_reps.push_back(inv(x));
        }
    }
    return reps;
}

}  // namespace polygraph
