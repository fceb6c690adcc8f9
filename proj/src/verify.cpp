#include "polygraph/verify.hpp"

#include <chrono>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace polygraph {

namespace {

using clock_type = std::chrono::steady_clock;

std::string render_grid(std::string_view suite, const SuiteGrid& g) {
    std::ostringstream os;
    os << "degrees=";
    for (std::size_t i = 0; i < g.degrees.size(); ++i) os << (i ? "," : "") << g.degrees[i];
    os << " primes=";
    for (std::size_t i = 0; i < g.primes.size(); ++i) os << (i ? "," : "") << g.primes[i];
    if (suite == "congruence") os << " K=" << g.max_k << " H=" << g.max_h;
    if (suite == "gcd") os << " K=" << g.max_iterate;
    if (suite == "notsquare") os << " M=" << g.max_index;
    if (suite == "notethpower")
        os << " J=" << g.max_j << " samples=" << g.samples << " seed=" << g.seed;
    if (suite == "bounds-sandwich") os << " eta_depth=" << g.eta_depth;
    return os.str();
}

void absorb(VerificationReport& rep, const LemmaReport& lr, u64 d, u64 p) {
    rep.checks += lr.checks;
    if (!lr.pass) {
        std::ostringstream os;
        os << lr.name << " d=" << d << " p=" << p << " :: " << lr.counterexample;
        rep.failures.push_back(os.str());
    }
}

void fail(VerificationReport& rep, const std::string& what) { rep.failures.push_back(what); }

void bounds_sandwich_point(VerificationReport& rep, u64 d, u64 p, u64 eta_depth) {
    const Field F(p);
    const u64 q = p;
    if (d == 2 && p == 2) {
        ++rep.skipped_points;  // normalized census does not cover this corner
        return;
    }
    const CensusResult census = census_normalized(F, d, 0);
    const u64 N = census.distinct;
    const u64 upper = distinct_graph_upper_bound(d, q, p);
    const u64 e = std::gcd(d, q - 1);
    std::ostringstream ctx;
    ctx << "d=" << d << " q=" << q;

    ++rep.checks;
    if (N > upper)
        fail(rep, ctx.str() + " census " + std::to_string(N) + " exceeds upper bound " +
                      std::to_string(upper));
    if (e >= 2) {
        const u64 lower = eta_lower_bound(F, d, eta_depth);
        ++rep.checks;
        if (lower > N)
            fail(rep, ctx.str() + " eta lower bound " + std::to_string(lower) +
                          " exceeds census " + std::to_string(N));
    }
    if (d >= 3) {
        u64 cube = 1;
        for (u64 i = 0; i + 1 < d; ++i) cube *= q;
        ++rep.checks;
        if (N > 3 * cube) fail(rep, ctx.str() + " census exceeds 3 q^{d-1}");
    }
    if (d % p != 0 && std::gcd(q - 1, d - 1) == 1) {
        u64 qd1 = 1;
        for (u64 i = 0; i + 1 < d; ++i) qd1 *= q;
        ++rep.checks;
        if (N > qd1) fail(rep, ctx.str() + " census exceeds q^{d-1} in the s=1 case");
    }
    if (d == 2 && p % 2 == 1) {
        ++rep.checks;
        if (upper != q) fail(rep, ctx.str() + " quadratic upper bound is not q");
        ++rep.checks;
        if (N != q && N != q - 1)
            fail(rep, ctx.str() + " quadratic census " + std::to_string(N) +
                          " is neither q nor q-1");
    }
}

}  // namespace

VerificationReport run_suite(std::string_view name, const SuiteGrid& grid) {
    VerificationReport rep;
    rep.suite = std::string(name);
    rep.grid = render_grid(name, grid);
    const auto t0 = clock_type::now();

    if (name == "congruence") {
        for (u64 p : grid.primes) {
            const Field F(p);
            for (u64 d : grid.degrees) absorb(rep, check_iterate_congruence(F, d, grid.max_k, grid.max_h), d, p);
        }
    } else if (name == "gcd") {
        for (u64 p : grid.primes) {
            const Field F(p);
            for (u64 d : grid.degrees) absorb(rep, check_iterate_gcd(F, d, grid.max_iterate), d, p);
        }
    } else if (name == "notsquare") {
        for (u64 p : grid.primes) {
            if (p == 2) {
                ++rep.skipped_points;
                continue;
            }
            const Field F(p);
            absorb(rep, check_products_not_square(F, grid.max_index), 2, p);
        }
    } else if (name == "notethpower") {
        for (u64 p : grid.primes) {
            const Field F(p);
            for (u64 d : grid.degrees) {
                if (d < 3 || std::gcd(d - 1, p) != 1 || std::gcd(d, p - 1) < 2) {
                    ++rep.skipped_points;
                    continue;
                }
                absorb(rep, check_products_not_eth_power(F, d, grid.max_j, grid.samples, grid.seed),
                       d, p);
            }
        }
    } else if (name == "bounds-sandwich") {
        for (u64 p : grid.primes)
            for (u64 d : grid.degrees) bounds_sandwich_point(rep, d, p, grid.eta_depth);
    } else {
        throw PreconditionError("unknown suite: " + std::string(name));
    }

    rep.wall_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    return rep;
}

std::string VerificationReport::to_json(bool with_timing) const {
    nlohmann::json j{{"suite", suite},
                     {"grid", grid},
                     {"checks", checks},
                     {"skipped_points", skipped_points},
                     {"failures", failures},
                     {"pass", pass()}};
    if (with_timing) j["wall_seconds"] = wall_seconds;
    return j.dump(2);
}

}  // namespace polygraph
