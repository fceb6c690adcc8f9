#ifndef POLYGRAPH_CENSUS_HPP
#define POLYGRAPH_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "polygraph/canon.hpp"

namespace polygraph {

// Graph-count guard for census scans.
inline constexpr u64 kCensusBudget = 10'000'000;

struct CensusResult {
    u64 d = 0;
    u64 q = 0;
    u64 family_size = 0;   // polynomials examined
    u64 distinct = 0;      // N_d(q) for the scanned family
    std::string mode;      // "normalized" | "brute-force"
    LabelMode label_mode = LabelMode::general;
    bool keys_kept = false;
    std::vector<std::string> keys;  // sorted canonical byte keys, when kept
    double wall_seconds = 0;

    std::string summary_json() const;
};

// Scan of the conjugation-normalized family: leading coefficient restricted
// to power-coset representatives of gcd(d-1, q-1), one lower coefficient
// pinned to zero. Rejects d = 2 over q = 2. Result is independent of `jobs`.
CensusResult census_normalized(const Field& F, u64 d, unsigned jobs = 1,
                               bool keep_keys = false);

// Scan of every degree-d polynomial, (q-1) q^d graphs; the census oracle.
CensusResult census_bruteforce(const Field& F, u64 d, unsigned jobs = 1,
                               bool keep_keys = false, u64 budget = kCensusBudget);

// Exact count bound from the affine-conjugation orbit argument:
// q^{d-1} + (s-1) q^{d-1-phi(d-1)}, plus (q-1) q^{d/p-1} when p | d,
// with s = gcd(q-1, d-1).
u64 distinct_graph_upper_bound(u64 d, u64 q, u64 p);

// Exponent of the lower bound q^rho: rho = 1 / (2 (e - 1 + ln d / ln e)).
double lower_bound_exponent(u64 d, u64 e);

// Along the forward orbit of a under x -> x^d + a, counts at each step j the
// non-trivial unity multiples of the orbit point that are e-th power
// nonresidues after subtracting a (e = gcd(d, p-1), which must be >= 2).
// Entries for j = j_start .. j_start + J - 1.
std::vector<u64> eta_vector(const Field& F, u64 d, u64 a, u64 J, u64 j_start = 1);

// Number of distinct eta vectors over a in F_p^*; a lower bound on the count
// of non-isomorphic graphs of the x^d + a family, hence on N_d(p).
u64 eta_lower_bound(const Field& F, u64 d, u64 J, u64 j_start = 1);

struct BoundsReport {
    u64 d = 0, q = 0, p = 0;
    u64 s = 0;    // gcd(q-1, d-1)
    u64 phi = 0;  // Euler phi of d-1
    u64 upper = 0;
    u64 e = 0;  // gcd(d, q-1)
    double rho = 0;
    std::optional<u64> eta_lower;

    std::string to_json() const;
};

BoundsReport bounds_report(const Field& F, u64 d, std::optional<u64> eta_depth = {});

}  // namespace polygraph

#endif
