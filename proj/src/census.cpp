#include "polygraph/census.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace polygraph {

namespace {

using clock_type = std::chrono::steady_clock;

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// A census family is indexed 0..family_size-1; the builder materializes the
// coefficient vector (ascending, length d+1) for one index.
struct Family {
    u64 size = 0;
    std::function<void(u64 index, std::vector<u64>& coeffs)> build;
};

Family normalized_family(const Field& F, u64 d) {
    const u64 q = F.modulus();
    const u64 m = std::gcd(d - 1, q - 1);
    const auto omega = F.power_coset_representatives(m);

    u128 qpow = 1;  // q^{d-1}
    for (u64 i = 0; i + 1 < d; ++i) qpow *= q;
    Family fam;

    if (d % q == 0) {
        // p | d: leading coefficient in omega and a_{d-1} = 0 (free rest), or
        // a_{d-1} nonzero and a_{d-2} = 0
        const u128 part1 = static_cast<u128>(omega.size()) * qpow;
        const u128 part2 = static_cast<u128>(omega.size()) * (q - 1) * (qpow / q);
        const u128 total = part1 + part2;
        if (total > kCensusBudget) throw BudgetError("census family exceeds graph budget");
        fam.size = static_cast<u64>(total);
        const u64 part1_sz = static_cast<u64>(part1);
        fam.build = [=](u64 index, std::vector<u64>& cs) {
            cs.assign(d + 1, 0);
            if (index < part1_sz) {
                // a_{d-1} = 0, a_0..a_{d-2} free
                u64 rest = index;
                cs[d] = omega[rest % omega.size()];
                rest /= omega.size();
                for (u64 j = 0; j + 1 < d; ++j) {
                    cs[j] = rest % q;
                    rest /= q;
                }
            } else {
                // a_{d-1} in F_q^*, a_{d-2} = 0, a_0..a_{d-3} free
                u64 rest = index - part1_sz;
                cs[d] = omega[rest % omega.size()];
                rest /= omega.size();
                cs[d - 1] = 1 + rest % (q - 1);
                rest /= (q - 1);
                for (u64 j = 0; j + 2 < d; ++j) {
                    cs[j] = rest % q;
                    rest /= q;
                }
            }
        };
    } else {
        // p does not divide d: leading coefficient in omega, a_{d-1} = 0
        const u128 total = static_cast<u128>(omega.size()) * qpow;
        if (total > kCensusBudget) throw BudgetError("census family exceeds graph budget");
        fam.size = static_cast<u64>(total);
        fam.build = [=](u64 index, std::vector<u64>& cs) {
            cs.assign(d + 1, 0);
            cs[d] = omega[index % omega.size()];
            u64 rest = index / omega.size();
            for (u64 j = 0; j + 1 < d; ++j) {
                cs[j] = rest % q;
                rest /= q;
            }
        };
    }
    return fam;
}

Family bruteforce_family(const Field& F, u64 d, u64 budget) {
    const u64 q = F.modulus();
    u128 total = q - 1;
    for (u64 i = 0; i < d; ++i) total *= q;
    if (total > budget) {
        std::ostringstream os;
        os << "brute-force census needs " << static_cast<u64>(total)
           << " graphs, over the budget of " << budget;
        throw BudgetError(os.str());
    }
    Family fam;
    fam.size = static_cast<u64>(total);
    fam.build = [=](u64 index, std::vector<u64>& cs) {
        cs.assign(d + 1, 0);
        cs[d] = 1 + index % (q - 1);
        u64 rest = index / (q - 1);
        for (u64 j = 0; j < d; ++j) {
            cs[j] = rest % q;
            rest /= q;
        }
    };
    return fam;
}

CensusResult scan_family(const Field& F, u64 d, const Family& fam, LabelMode mode,
                         unsigned jobs, bool keep_keys, const char* mode_name) {
    const auto t0 = clock_type::now();
    jobs = resolve_jobs(jobs);
    const unsigned workers =
        static_cast<unsigned>(std::min<u64>(jobs, std::max<u64>(fam.size, 1)));

    std::vector<std::vector<std::string>> partial(workers);
    auto run = [&](unsigned w) {
        const u64 lo = fam.size * w / workers;
        const u64 hi = fam.size * (w + 1) / workers;
        std::vector<u64> cs;
        std::set<std::string> seen;
        for (u64 i = lo; i < hi; ++i) {
            fam.build(i, cs);
            const FunctionalGraph g = FunctionalGraph::from_poly(F, Poly::from_coeffs(F, cs));
            seen.insert(label_graph(g, mode).key());
        }
        partial[w].assign(seen.begin(), seen.end());
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }

    std::vector<std::string> merged;
    for (auto& p : partial) {
        merged.insert(merged.end(), std::make_move_iterator(p.begin()),
                      std::make_move_iterator(p.end()));
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

    CensusResult r;
    r.d = d;
    r.q = F.modulus();
    r.family_size = fam.size;
    r.distinct = merged.size();
    r.mode = mode_name;
    r.label_mode = mode;
    r.keys_kept = keep_keys;
    if (keep_keys) r.keys = std::move(merged);
    r.wall_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return r;
}

LabelMode family_label_mode(u64 d, u64 p) {
    return (d == 2 && p % 2 == 1) ? LabelMode::quadratic : LabelMode::general;
}

}  // namespace

CensusResult census_normalized(const Field& F, u64 d, unsigned jobs, bool keep_keys) {
    if (d < 2) throw PreconditionError("census needs degree >= 2");
    const u64 p = F.modulus();
    if (d == 2 && p == 2)
        throw PreconditionError("normalized census does not cover degree 2 over F_2");
    return scan_family(F, d, normalized_family(F, d), family_label_mode(d, p), jobs, keep_keys,
                       "normalized");
}

CensusResult census_bruteforce(const Field& F, u64 d, unsigned jobs, bool keep_keys,
                               u64 budget) {
    if (d < 2) throw PreconditionError("census needs degree >= 2");
    return scan_family(F, d, bruteforce_family(F, d, budget), family_label_mode(d, F.modulus()),
                       jobs, keep_keys, "brute-force");
}

std::string CensusResult::summary_json() const {
    nlohmann::json j{{"d", d},
                     {"q", q},
                     {"N", distinct},
                     {"family_size", family_size},
                     {"mode", mode},
                     {"wall_time", wall_seconds}};
    return j.dump();
}

u64 distinct_graph_upper_bound(u64 d, u64 q, u64 p) {
    if (d < 2) throw PreconditionError("bound needs degree >= 2");
    const u64 s = std::gcd(q - 1, d - 1);
    const u64 phi = euler_phi(d - 1);
    auto qpow = [&](u64 e) {
        u128 r = 1;
        for (u64 i = 0; i < e; ++i) r *= q;
        return r;
    };
    u128 bound = qpow(d - 1);
    if (s >= 2) bound += (s - 1) * qpow(d - 1 - phi);
    if (d % p == 0) bound += (q - 1) * qpow(d / p - 1);
    if (bound > std::numeric_limits<u64>::max())
        throw PreconditionError("upper bound does not fit 64 bits");
    return static_cast<u64>(bound);
}

double lower_bound_exponent(u64 d, u64 e) {
    if (d < 2 || e < 2) throw PreconditionError("exponent constant needs d, e >= 2");
    return 1.0 / (2.0 * (static_cast<double>(e) - 1.0 +
                         std::log(static_cast<double>(d)) / std::log(static_cast<double>(e))));
}

std::vector<u64> eta_vector(const Field& F, u64 d, u64 a, u64 J, u64 j_start) {
    const u64 p = F.modulus();
    const u64 e = std::gcd(d, p - 1);
    if (e < 2) throw PreconditionError("eta vector needs gcd(d, p-1) >= 2");
    if (a == 0 || a >= p) throw PreconditionError("eta vector needs a in F_p^*");
    if (j_start < 1) throw PreconditionError("eta index starts at 1");
    const auto& unity = F.roots_of_unity(e);

    std::vector<u64> eta;
    eta.reserve(J);
    u64 x = a;  // orbit point f^{(j)}(a), starting at j = 0
    for (u64 j = 1; j < j_start + J; ++j) {
        x = F.add(F.pow(x, d), a);
        if (j < j_start) continue;
        u64 cnt = 0;
        for (u64 gamma : unity) {
            if (gamma == 1) continue;
            if (!F.is_eth_power(F.sub(F.mul(gamma, x), a), e)) ++cnt;
        }
        eta.push_back(cnt);
    }
    return eta;
}

u64 eta_lower_bound(const Field& F, u64 d, u64 J, u64 j_start) {
    const u64 p = F.modulus();
    const u64 e = std::gcd(d, p - 1);
    if (e < 2) throw PreconditionError("eta vector needs gcd(d, p-1) >= 2");
    if (J == 0) return 1;
    std::vector<std::string> vecs;
    vecs.reserve(p - 1);
    for (u64 a = 1; a < p; ++a) {
        const auto eta = eta_vector(F, d, a, J, j_start);
        std::string key(eta.size(), 0);
        for (std::size_t i = 0; i < eta.size(); ++i) key[i] = static_cast<char>(eta[i]);
        vecs.push_back(std::move(key));
    }
    std::sort(vecs.begin(), vecs.end());
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
    return vecs.size();
}

BoundsReport bounds_report(const Field& F, u64 d, std::optional<u64> eta_depth) {
    if (d < 2) throw PreconditionError("bounds need degree >= 2");
    BoundsReport r;
    r.d = d;
    r.q = r.p = F.modulus();
    r.s = std::gcd(r.q - 1, d - 1);
    r.phi = euler_phi(d - 1);
    r.upper = distinct_graph_upper_bound(d, r.q, r.p);
    r.e = std::gcd(d, r.q - 1);
    r.rho = r.e >= 2 ? lower_bound_exponent(d, r.e) : 0.0;
    if (eta_depth && r.e >= 2) r.eta_lower = eta_lower_bound(F, d, *eta_depth);
    return r;
}

std::string BoundsReport::to_json() const {
    nlohmann::json j{{"d", d},     {"q", q},    {"p", p}, {"s", s},
                     {"phi", phi}, {"upper", upper}, {"e", e}, {"rho", rho}};
    if (eta_lower) j["eta_lower"] = *eta_lower;
    return j.dump();
}

}  // namespace polygraph
