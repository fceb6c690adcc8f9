#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polygraph/lemmas.hpp"

using namespace polygraph;

TEST_CASE("iterate congruence instances") {
    {
        const Field F(5);
        const auto rep = check_iterate_congruence(F, 2, 4, 4);
        CHECK(rep.pass);
        CHECK(rep.checks == 4 * 4 * 4);  // |unity group|^2 = 4
    }
    {
        const Field F(13);
        const auto rep = check_iterate_congruence(F, 3, 3, 3);
        CHECK(rep.pass);
        CHECK(rep.checks == 3 * 3 * 9);  // e = gcd(3, 12) = 3
    }
    {
        const Field F(5);
        const auto rep = check_iterate_congruence(F, 2, 1, 1);
        CHECK(rep.pass);
        CHECK(rep.checks == 4);
    }
    CHECK_THROWS_AS(check_iterate_congruence(Field(5), 2, 30, 30), BudgetError);
}

TEST_CASE("iterate gcd instances") {
    {
        const Field F(5);
        const auto rep = check_iterate_gcd(F, 2, 6);
        CHECK(rep.pass);
        CHECK(rep.checks == 2 * 36);
    }
    {
        // single hand case: k=2, m=4, gamma=-1 over F_5
        const Field F(5);
        const Poly g2 = twist_poly(F, 2, 2, 4);
        const Poly g4 = twist_poly(F, 2, 4, 4);
        CHECK(poly_gcd(F, g2, g4) == poly_monic(F, g2));
        // k = m reduces to the polynomial itself
        CHECK(poly_gcd(F, g2, g2) == poly_monic(F, g2));
    }
    {
        const Field F(13);
        CHECK(check_iterate_gcd(F, 3, 4).pass);
    }
}

TEST_CASE("subset products are never squares (d = 2)") {
    {
        const Field F(5);
        const auto rep = check_products_not_square(F, 5);
        CHECK(rep.pass);
        CHECK(rep.checks == 31);
    }
    {
        const Field F(13);
        const auto rep = check_products_not_square(F, 4);
        CHECK(rep.pass);
        CHECK(rep.checks == 15);
    }
    CHECK_THROWS_AS(check_products_not_square(Field(2), 3), PreconditionError);
}

TEST_CASE("exponent-collection products are never e-th powers (d >= 3)") {
    {
        const Field F(7);
        const auto rep = check_products_not_eth_power(F, 3, 3, 50, 1);
        CHECK(rep.pass);
        CHECK(rep.checks == 51);  // all-ones plus 50 samples
    }
    {
        // samples = 0 checks only the all-ones collection
        const Field F(13);
        const auto rep = check_products_not_eth_power(F, 3, 2, 0, 1);
        CHECK(rep.pass);
        CHECK(rep.checks == 1);
    }
    CHECK_THROWS_AS(check_products_not_eth_power(Field(7), 2, 3, 1, 1), PreconditionError);
    CHECK_THROWS_AS(check_products_not_eth_power(Field(5), 3, 3, 1, 1), PreconditionError);  // e=1
}

TEST_CASE("seeded runs reproduce") {
    const Field F(7);
    const auto a = check_products_not_eth_power(F, 3, 3, 20, 42);
    const auto b = check_products_not_eth_power(F, 3, 3, 20, 42);
    CHECK(a.checks == b.checks);
    CHECK(a.pass == b.pass);
}
