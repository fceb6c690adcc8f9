#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "polygraph/census.hpp"

using namespace polygraph;

TEST_CASE("count upper bound") {
    CHECK(distinct_graph_upper_bound(2, 5, 5) == 5);    // s = 1, p does not divide d
    CHECK(distinct_graph_upper_bound(2, 8, 2) == 15);   // 2q - 1 when p | d
    CHECK(distinct_graph_upper_bound(3, 7, 7) == 56);   // 49 + (2-1) * 7^{2-phi(2)}
    CHECK(distinct_graph_upper_bound(3, 3, 3) == 14);   // p | d adds (q-1) q^{d/p-1}

    // quadratic case over odd primes collapses to q
    for (u64 p : {3ull, 7ull, 31ull, 97ull}) CHECK(distinct_graph_upper_bound(2, p, p) == p);
    // d >= 3 never exceeds 3 q^{d-1}
    for (u64 d : {3ull, 4ull, 5ull})
        for (u64 p : {3ull, 5ull, 7ull, 13ull}) {
            u64 qd1 = 1;
            for (u64 i = 0; i + 1 < d; ++i) qd1 *= p;
            CHECK(distinct_graph_upper_bound(d, p, p) <= 3 * qd1);
        }
}

TEST_CASE("lower bound exponent") {
    CHECK(lower_bound_exponent(2, 2) == doctest::Approx(0.25));
    CHECK(lower_bound_exponent(4, 2) == doctest::Approx(1.0 / 6.0));
    CHECK(lower_bound_exponent(3, 3) == doctest::Approx(1.0 / 6.0));
    CHECK_THROWS_AS(lower_bound_exponent(2, 1), PreconditionError);
}

TEST_CASE("eta vectors") {
    const Field F5(5);
    CHECK(eta_vector(F5, 2, 1, 1) == std::vector<u64>{1});
    // frozen from the exhaustive z^e residue oracle
    CHECK(eta_vector(F5, 2, 1, 3) == std::vector<u64>{1, 0, 1});

    // independent oracle: nonresidue decided by scanning all z^e values
    for (u64 p : {5ull, 13ull}) {
        const Field F(p);
        for (u64 d : {2ull, 4ull}) {
            const u64 e = std::gcd(d, p - 1);
            if (e < 2) continue;
            for (u64 a = 1; a < p; ++a) {
                std::vector<u64> expect;
                u64 x = a;
                for (u64 j = 1; j <= 4; ++j) {
                    x = F.add(F.pow(x, d), a);
                    u64 cnt = 0;
                    for (u64 g = 2; g < p; ++g) {
                        if (F.pow(g, e) != 1) continue;
                        const u64 v = F.sub(F.mul(g, x), a);
                        bool has_root = false;
                        for (u64 z = 0; z < p && !has_root; ++z) has_root = F.pow(z, e) == v;
                        if (!has_root) ++cnt;
                    }
                    expect.push_back(cnt);
                }
                CHECK(eta_vector(F, d, a, 4) == expect);
            }
        }
    }

    // e = 2 leaves a single non-trivial unity element
    for (u64 a = 1; a < 13; ++a)
        for (u64 v : eta_vector(Field(13), 2, a, 5)) CHECK(v <= 1);

    // shifting the start index drops a prefix of the full vector
    const Field F13(13);
    for (u64 a = 1; a < 13; ++a) {
        const auto full = eta_vector(F13, 4, a, 6, 1);
        const auto tail = eta_vector(F13, 4, a, 4, 3);
        CHECK(std::vector<u64>(full.begin() + 2, full.end()) == tail);
    }

    CHECK_THROWS_AS(eta_vector(F5, 2, 0, 1), PreconditionError);
    CHECK_THROWS_AS(eta_vector(Field(5), 3, 1, 1), PreconditionError);  // e = 1
}

TEST_CASE("eta lower bound") {
    const Field F5(5);
    CHECK(eta_lower_bound(F5, 2, 0) == 1);
    CHECK(eta_lower_bound(F5, 2, 2) == 3);  // frozen; must stay <= N_2(5) = 5
    const Field F13(13);
    CHECK(eta_lower_bound(F13, 4, 2) == 4);  // frozen; <= N_4(13)
    CHECK(eta_lower_bound(F13, 2, 2) == 4);
}

TEST_CASE("quadratic censuses hit the known counts") {
    CHECK(census_normalized(Field(5), 2).distinct == 5);
    CHECK(census_normalized(Field(17), 2).distinct == 16);
    CHECK(census_bruteforce(Field(2), 2).distinct == 3);
    CHECK(census_bruteforce(Field(3), 2).distinct == 3);

    const CensusResult r = census_normalized(Field(5), 2, 1, true);
    CHECK(r.family_size == 5);
    CHECK(r.keys.size() == 5);
    CHECK(std::is_sorted(r.keys.begin(), r.keys.end()));
    CHECK(r.label_mode == LabelMode::quadratic);
    CHECK(r.summary_json().find("\"N\":5") != std::string::npos);

    CHECK_THROWS_AS(census_normalized(Field(2), 2), PreconditionError);
    CHECK_THROWS_AS(census_bruteforce(Field(101), 4), BudgetError);
}

TEST_CASE("normalized census equals the brute-force oracle") {
    // frozen oracle values; the full grid runs in the acceptance suite
    struct Row {
        u64 d, p, n;
    };
    for (const Row row : {Row{3, 5, 23}, Row{3, 7, 45}, Row{4, 3, 7}, Row{3, 3, 7}}) {
        const Field F(row.p);
        const CensusResult norm = census_normalized(F, row.d, 2);
        const CensusResult brute = census_bruteforce(F, row.d, 2);
        CHECK(norm.distinct == row.n);
        CHECK(brute.distinct == row.n);
    }
}

TEST_CASE("census is independent of the worker count") {
    const Field F(13);
    const CensusResult a = census_normalized(F, 3, 1, true);
    const CensusResult b = census_normalized(F, 3, 3, true);
    const CensusResult c = census_normalized(F, 3, 7, true);
    CHECK(a.distinct == b.distinct);
    CHECK(a.keys == b.keys);
    CHECK(a.keys == c.keys);
}

TEST_CASE("bounds report") {
    const Field F5(5);
    const BoundsReport r = bounds_report(F5, 2, 2);
    CHECK(r.upper == 5);
    CHECK(r.s == 1);
    CHECK(r.e == 2);
    CHECK(r.rho == doctest::Approx(0.25));
    REQUIRE(r.eta_lower.has_value());
    CHECK(*r.eta_lower <= 5);
    CHECK(r.to_json().find("\"upper\":5") != std::string::npos);

    // d = 3 over F_5 has e = 1: no eta bound, rho reported as 0
    const BoundsReport r2 = bounds_report(F5, 3, 2);
    CHECK_FALSE(r2.eta_lower.has_value());
    CHECK(r2.rho == 0.0);
}
