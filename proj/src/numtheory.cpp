#include "polygraph/numtheory.hpp"

#include <algorithm>
#include <numeric>

namespace polygraph {

u64 powmod(u64 a, u64 e, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace {

bool miller_rabin(u64 n, u64 a) {
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    u64 x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_brent(u64 n) {
    // Brent's cycle-finding variant; n must be odd composite, not a prime power of 2.
    if ((n & 1) == 0) return 2;
    u64 c = 1;
    for (;;) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        u64 ys = y;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && d == 1; k += m) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            do {
                ys = f(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        ++c;  // rare: retry with a different polynomial
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

u64 iroot(u64 n, unsigned k) {
    // floor(n^(1/k)) by binary search
    u64 lo = 1, hi = 1;
    while (true) {
        u128 v = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            v *= (hi + 1);
            if (v > n) {
                over = true;
                break;
            }
        }
        if (over) break;
        hi = hi * 2 + 1;
    }
    while (lo < hi) {
        u64 mid = lo + (hi - lo + 1) / 2;
        u128 v = 1;
        bool over = false;
        for (unsigned i = 0; i < k; ++i) {
            v *= mid;
            if (v > n) {
                over = true;
                break;
            }
        }
        if (over)
            hi = mid - 1;
        else
            lo = mid;
    }
    return lo;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin(n, a)) return false;
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    std::vector<u64> primes;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [p, k] : factorize(n)) {
        (void)k;
        r -= r / p;
    }
    return r;
}

bool is_proper_prime_power(u64 n) {
    if (n < 4) return false;
    for (unsigned k = 2; k <= 63; ++k) {
        u64 r = iroot(n, k);
        if (r < 2) break;
        u128 v = 1;
        for (unsigned i = 0; i < k; ++i) v *= r;
        if (v == n && is_prime(r)) return true;
    }
    return false;
}

}  // namespace polygraph
