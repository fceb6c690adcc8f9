#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "polygraph/stats.hpp"

using namespace polygraph;

TEST_CASE("family aggregates for small primes") {
    const FamilyStats fs = family_stats(7, false);
    CHECK(fs.family_count == 7);
    CHECK(fs.num_leaves.min == 3);
    CHECK(fs.num_leaves.max == 3);
    CHECK(fs.num_leaves.mean == doctest::Approx(3.0));
    CHECK(fs.largest_component.max == 7);  // some graph is connected
    CHECK(fs.r == largest_odd_divisor(6));
    CHECK(fs.s == largest_odd_divisor(8));

    const FamilyStats ex = family_stats(7, true);
    CHECK(ex.family_count == 5);
    CHECK(ex.exclude_special);
    CHECK(ex.num_leaves.min == 3);

    CHECK_THROWS_AS(family_stats(2, false), PreconditionError);
    CHECK_THROWS_AS(family_stats(9, false), PreconditionError);
}

TEST_CASE("scan parallelism does not change sums") {
    const FamilyStats a = family_stats(101, false, 1);
    const FamilyStats b = family_stats(101, false, 3);
    CHECK(a.cyclic_points.sum == b.cyclic_points.sum);
    CHECK(a.num_components.sum == b.num_components.sum);
    CHECK(a.largest_component.min == b.largest_component.min);
    CHECK(a.popular_multiplicity.max == b.popular_multiplicity.max);
}

TEST_CASE("random-map baselines") {
    // the two reference columns at p = 500009, to their printed precision
    const double p = 500009.0;
    CHECK(std::sqrt(std::acos(-1.0) * p / 2.0) == doctest::Approx(886.2349015).epsilon(1e-9));
    CHECK(0.5 * std::log(p) == doctest::Approx(6.561190689).epsilon(1e-9));

    const FamilyStats fs = family_stats(101, false);
    CHECK(fs.expected_cyclic == doctest::Approx(std::sqrt(std::acos(-1.0) * 101 / 2.0)));
    CHECK(fs.expected_components == doctest::Approx(0.5 * std::log(101.0)));
    CHECK(fs.expected_largest == doctest::Approx(0.75788 * 101));
    CHECK(fs.expected_leaves == doctest::Approx(101.0 / std::exp(1.0)));
}

TEST_CASE("cyclic extremes and the two special polynomials") {
    {
        const CyclicExtremes ce = cyclic_extremes(7);
        CHECK(ce.C == 4);  // (p+1)/2 for p = 3 mod 4
        CHECK(ce.identity_f0);
        CHECK(ce.identity_fm2);
        CHECK(ce.min_cyclic == 1);  // p = 7 is one of the two small exceptions
    }
    {
        const CyclicExtremes ce = cyclic_extremes(13);
        CHECK(ce.r == 3);
        CHECK(ce.c_f0 == 4);  // r + 1
        CHECK(ce.identity_f0);
        CHECK(ce.identity_fm2);
        CHECK(ce.min_cyclic == 2);
    }
    for (u64 p : {11ull, 17ull, 19ull, 101ull}) {
        const CyclicExtremes ce = cyclic_extremes(p);
        CHECK(ce.identity_f0);
        CHECK(ce.identity_fm2);
        CHECK(ce.C >= (p + 3) / 4);
        CHECK(ce.min_cyclic == 2);
        if (p % 4 == 3) CHECK(ce.C == (p + 1) / 2);
        CHECK(ce.C_star <= ce.C);
    }
}

TEST_CASE("table rendering") {
    std::vector<FamilyStats> rows{family_stats(7, true), family_stats(11, true)};

    const std::string csv = emit_table(rows, TableFormat::csv);
    CHECK(csv.find("prime,metric,min,max,mean,expected,ratio") == 0);
    // 2 primes x 6 metrics + header
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
    CHECK(csv.find("7,num_leaves,3,3,3") != std::string::npos);

    const std::string text = emit_table(rows, TableFormat::text);
    CHECK(text.find("Ratio") != std::string::npos);     // component table carries it
    CHECK(text.find("Expected") != std::string::npos);
    CHECK(text.find("num_components") != std::string::npos);

    const std::string empty_text = emit_table({}, TableFormat::csv);
    CHECK(empty_text == "prime,metric,min,max,mean,expected,ratio\n");

    CHECK(emit_table(rows, TableFormat::json).find("\"metric\"") != std::string::npos);
    CHECK_THROWS_AS(parse_table_format("bogus"), PreconditionError);
    CHECK(parse_table_format("csv") == TableFormat::csv);
}
