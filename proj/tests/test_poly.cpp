#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polygraph/poly.hpp"

using namespace polygraph;

namespace {

Poly P(const Field& F, std::vector<u64> cs) { return Poly::from_coeffs(F, std::move(cs)); }

Poly random_poly(const Field& F, std::mt19937_64& rng, std::size_t max_deg) {
    std::vector<u64> cs(1 + rng() % (max_deg + 1));
    for (auto& c : cs) c = rng() % F.modulus();
    return Poly::from_coeffs(F, std::move(cs));
}

}  // namespace

TEST_CASE("normalization and evaluation") {
    const Field F5(5);
    CHECK(P(F5, {0, 0, 1}).degree() == 2);
    CHECK(P(F5, {0, 0, 0}).is_zero());
    CHECK(P(F5, {7, 1, 5}).coeffs == std::vector<u64>{2, 1});  // reduced and trimmed

    CHECK(poly_eval(F5, P(F5, {0, 0, 1}), 3) == 4);
    CHECK(poly_eval(F5, P(F5, {1, 0, 1}), 2) == 0);
    const Field F7(7);
    CHECK(poly_eval(F7, P(F7, {1, 2, 0, 1}), 0) == 1);
}

TEST_CASE("ring operations") {
    const Field F5(5);
    // (X+1)(X+4) = X^2 + 4 over F_5
    CHECK(poly_mul(F5, P(F5, {1, 1}), P(F5, {4, 1})) == P(F5, {4, 0, 1}));
    // derivative of X^5 vanishes in characteristic 5
    CHECK(poly_derivative(F5, P(F5, {0, 0, 0, 0, 0, 1})).is_zero());
    // X^3 mod (X^2+1) = -X = 4X
    CHECK(poly_mod(F5, P(F5, {0, 0, 0, 1}), P(F5, {1, 0, 1})) == P(F5, {0, 4}));
    CHECK_THROWS_AS(poly_mod(F5, P(F5, {1}), Poly::zero()), DivisionByZeroError);

    // divmod reassembles
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const Poly a = random_poly(F5, rng, 9);
        Poly b = random_poly(F5, rng, 5);
        if (b.is_zero()) b = Poly::identity();
        const auto [q, r] = poly_divmod(F5, a, b);
        CHECK(poly_add(F5, poly_mul(F5, q, b), r) == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd") {
    const Field F5(5);
    CHECK(poly_gcd(F5, P(F5, {4, 0, 1}), P(F5, {4, 1})) == P(F5, {4, 1}));  // monic X-1
    CHECK(poly_gcd(F5, P(F5, {3, 2}), Poly::zero()) == poly_monic(F5, P(F5, {3, 2})));
    // Euclid by hand: gcd(X^2+1, X^2+2) = 1
    CHECK(poly_gcd(F5, P(F5, {1, 0, 1}), P(F5, {2, 0, 1})) == P(F5, {1}));
    CHECK_THROWS_AS(poly_gcd(F5, Poly::zero(), Poly::zero()), PreconditionError);

    std::mt19937_64 rng(11);
    for (int it = 0; it < 100; ++it) {
        Poly a = random_poly(F5, rng, 8);
        Poly b = random_poly(F5, rng, 8);
        if (a.is_zero() && b.is_zero()) continue;
        const Poly g = poly_gcd(F5, a, b);
        CHECK(g.leading() == 1);
        if (!a.is_zero()) CHECK(poly_mod(F5, a, g).is_zero());
        if (!b.is_zero()) CHECK(poly_mod(F5, b, g).is_zero());
    }
}

TEST_CASE("iterates of x -> x^d + a as polynomials") {
    const Field F5(5);
    CHECK(iterate_poly(F5, 2, 0) == Poly::identity());
    CHECK(iterate_poly(F5, 2, 1) == P(F5, {0, 1, 1}));           // X^2 + X
    CHECK(iterate_poly(F5, 2, 2) == P(F5, {0, 1, 1, 2, 1}));     // X^4+2X^3+X^2+X

    // value at a must equal the scalar iteration of x -> x^d + a
    for (u64 p : {5ull, 7ull, 13ull, 101ull}) {
        const Field F(p);
        for (u64 d : {2ull, 3ull}) {
            for (u64 k = 0; k <= 8; ++k) {
                const Poly fk = iterate_poly(F, d, k);
                for (u64 a = 0; a < p; ++a) {
                    u64 x = a;
                    for (u64 i = 0; i < k; ++i) x = F.add(F.pow(x, d), a);
                    CHECK(poly_eval(F, fk, a) == x);
                }
            }
        }
    }

    CHECK_THROWS_AS(iterate_poly(F5, 2, 40), BudgetError);
}

TEST_CASE("twist polynomials") {
    const Field F5(5);
    // gamma = -1, k = 1: -X(X+2) = 4X^2 + 3X
    CHECK(twist_poly(F5, 2, 1, 4) == P(F5, {0, 3, 4}));
    // gamma = -1, k = 2: -X(X+2)(X^2+1)
    const Poly expect =
        poly_scal(F5, poly_mul(F5, poly_mul(F5, P(F5, {0, 1}), P(F5, {2, 1})), P(F5, {1, 0, 1})), 4);
    CHECK(twist_poly(F5, 2, 2, 4) == expect);

    const Field F7(7);
    CHECK(twist_poly(F7, 3, 1, 1) == P(F7, {0, 0, 0, 1}));  // X^3

    CHECK_THROWS_AS(twist_poly(F5, 2, 1, 3), PreconditionError);  // 3^2 != 1 mod 5

    // degree d^k; divisible by X exactly once
    for (u64 p : {5ull, 7ull, 13ull}) {
        const Field F(p);
        for (u64 d : {2ull, 3ull}) {
            const u64 e = std::gcd(d, p - 1);
            for (u64 gamma : F.roots_of_unity(e)) {
                if (gamma == 1) continue;
                u64 deg = 1;
                for (u64 k = 1; k <= 4; ++k) {
                    deg *= d;
                    const Poly g = twist_poly(F, d, k, gamma);
                    CHECK(g.degree() == static_cast<long>(deg));
                    CHECK(g.coeff(0) == 0);   // X divides
                    CHECK(g.coeff(1) != 0);   // X^2 does not
                }
            }
        }
    }
}

TEST_CASE("squarefree structure and perfect powers") {
    const Field F5(5);
    const Poly x = Poly::identity();
    const Poly xp2 = P(F5, {2, 1});

    // (X^2+X)^2 is a square
    const Poly sq = poly_mul(F5, P(F5, {0, 1, 1}), P(F5, {0, 1, 1}));
    CHECK(is_perfect_eth_power(F5, sq, 2));
    // X(X+2) is squarefree of degree 2
    CHECK_FALSE(is_perfect_eth_power(F5, poly_mul(F5, x, xp2), 2));
    // X^5 over F_5 exercises the vanishing-derivative branch
    CHECK(is_perfect_eth_power(F5, P(F5, {0, 0, 0, 0, 0, 1}), 5));
    CHECK_FALSE(is_perfect_eth_power(F5, P(F5, {0, 0, 0, 0, 0, 1}), 2));  // X^5, e=2
    CHECK(is_perfect_eth_power(F5, P(F5, {3}), 2));                        // scalars pass
    CHECK_THROWS_AS(is_perfect_eth_power(F5, Poly::zero(), 2), PreconditionError);
    CHECK_THROWS_AS(is_perfect_eth_power(F5, x, 1), PreconditionError);

    // decomposition reassembles the monic part with exact multiplicities
    std::mt19937_64 rng(23);
    for (u64 p : {3ull, 5ull, 7ull}) {
        const Field F(p);
        for (int it = 0; it < 120; ++it) {
            Poly prod = Poly::constant(F, 1);
            for (int piece = 0; piece < 3; ++piece) {
                Poly f = random_poly(F, rng, 2);
                if (f.is_zero() || f.degree() == 0) f = Poly::identity();
                const u64 mult = 1 + rng() % 5;
                for (u64 i = 0; i < mult; ++i) prod = poly_mul(F, prod, f);
            }
            Poly rebuilt = Poly::constant(F, 1);
            u64 prev_mult = 0;
            for (const auto& [mult, factor] : squarefree_decomposition(F, prod)) {
                CHECK(mult > prev_mult);
                prev_mult = mult;
                CHECK(factor.leading() == 1);
                // factor is squarefree: gcd with derivative is 1
                const Poly der = poly_derivative(F, factor);
                if (!der.is_zero()) CHECK(poly_gcd(F, factor, der).degree() == 0);
                for (u64 i = 0; i < mult; ++i) rebuilt = poly_mul(F, rebuilt, factor);
            }
            CHECK(rebuilt == poly_monic(F, prod));
        }
    }

    // e-th powers of random polynomials are recognized, e in {2, 3}
    for (u64 e : {2ull, 3ull}) {
        for (int it = 0; it < 60; ++it) {
            const Field F(it % 2 ? 5 : 7);
            Poly f = random_poly(F, rng, 4);
            if (f.is_zero()) f = Poly::identity();
            Poly pe = Poly::constant(F, 1);
            for (u64 i = 0; i < e; ++i) pe = poly_mul(F, pe, f);
            CHECK(is_perfect_eth_power(F, pe, e));
        }
    }
}
