#include "polygraph/lemmas.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace polygraph {

namespace {

std::vector<Poly> iterate_family(const Field& F, u64 d, u64 max_k) {
    // I_0..I_max_k in one pass
    std::vector<Poly> fam;
    fam.reserve(max_k + 1);
    fam.push_back(Poly::identity());
    for (u64 k = 1; k <= max_k; ++k) {
        Poly next = fam.back();
        Poly acc = Poly::constant(F, 1);
        for (u64 i = 0; i < d; ++i) acc = poly_mul(F, acc, next);
        fam.push_back(poly_add(F, acc, Poly::identity()));
    }
    return fam;
}

Poly twist_of(const Field& F, const Poly& iterate_k, u64 gamma) {
    return poly_sub(F, poly_scal(F, iterate_k, gamma), Poly::identity());
}

void require_degree(u64 d, u64 k) {
    u128 deg = 1;
    for (u64 i = 0; i < k; ++i) {
        deg *= d;
        if (deg > kDegreeBudget) throw BudgetError("polynomial degree budget exceeded");
    }
}

}  // namespace

LemmaReport check_iterate_congruence(const Field& F, u64 d, u64 K, u64 H) {
    LemmaReport rep;
    rep.name = "iterate-congruence";
    require_degree(d, K + H);
    const auto& gammas = F.roots_of_unity(std::gcd(d, F.modulus() - 1));
    const auto iter = iterate_family(F, d, K + H);
    for (u64 k = 1; k <= K; ++k) {
        for (u64 h = 1; h <= H; ++h) {
            for (u64 gamma : gammas) {
                const Poly lhs_minus_rhs =
                    poly_sub(F, twist_of(F, iter[k + h], gamma), twist_of(F, iter[h], gamma));
                for (u64 delta : gammas) {
                    ++rep.checks;
                    const Poly modulus = twist_of(F, iter[k], delta);
                    if (!poly_mod(F, lhs_minus_rhs, modulus).is_zero()) {
                        rep.pass = false;
                        std::ostringstream os;
                        os << "p=" << F.modulus() << " d=" << d << " k=" << k << " h=" << h
                           << " gamma=" << gamma << " delta=" << delta;
                        rep.counterexample = os.str();
                        return rep;
                    }
                }
            }
        }
    }
    return rep;
}

LemmaReport check_iterate_gcd(const Field& F, u64 d, u64 K) {
    LemmaReport rep;
    rep.name = "iterate-gcd";
    require_degree(d, K);
    const auto& gammas = F.roots_of_unity(std::gcd(d, F.modulus() - 1));
    const auto iter = iterate_family(F, d, K);
    for (u64 gamma : gammas) {
        std::vector<Poly> twists(K + 1);
        for (u64 k = 1; k <= K; ++k) twists[k] = twist_of(F, iter[k], gamma);
        for (u64 k = 1; k <= K; ++k) {
            for (u64 m = 1; m <= K; ++m) {
                ++rep.checks;
                const Poly got = poly_gcd(F, twists[k], twists[m]);
                const Poly want = poly_monic(F, twists[std::gcd(k, m)]);
                if (got != want) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << "p=" << F.modulus() << " d=" << d << " k=" << k << " m=" << m
                       << " gamma=" << gamma;
                    rep.counterexample = os.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

LemmaReport check_products_not_square(const Field& F, u64 M) {
    LemmaReport rep;
    rep.name = "products-not-square";
    if (F.modulus() == 2) throw PreconditionError("needs an odd prime");
    if (M >= 63) throw BudgetError("polynomial degree budget exceeded");
    require_degree(2, M);
    const u64 minus_one = F.modulus() - 1;
    const auto iter = iterate_family(F, 2, M);
    std::vector<Poly> twists(M + 1);
    for (u64 j = 1; j <= M; ++j) twists[j] = twist_of(F, iter[j], minus_one);
    for (u64 mask = 1; mask < (u64{1} << M); ++mask) {
        ++rep.checks;
        Poly prod = Poly::constant(F, 1);
        for (u64 j = 1; j <= M; ++j)
            if (mask & (u64{1} << (j - 1))) prod = poly_mul(F, prod, twists[j]);
        if (is_perfect_eth_power(F, prod, 2)) {
            rep.pass = false;
            std::ostringstream os;
            os << "p=" << F.modulus() << " subset={";
            bool first = true;
            for (u64 j = 1; j <= M; ++j)
                if (mask & (u64{1} << (j - 1))) {
                    os << (first ? "" : ",") << j;
                    first = false;
                }
            os << "}";
            rep.counterexample = os.str();
            return rep;
        }
    }
    return rep;
}

LemmaReport check_products_not_eth_power(const Field& F, u64 d, u64 J, u64 samples, u64 seed) {
    LemmaReport rep;
    rep.name = "products-not-eth-power";
    const u64 p = F.modulus();
    const u64 e = std::gcd(d, p - 1);
    if (d < 3) throw PreconditionError("needs map degree >= 3");
    if (std::gcd(d - 1, p) != 1) throw PreconditionError("needs gcd(d-1, p) = 1");
    if (e < 2) throw PreconditionError("needs gcd(d, p-1) >= 2");
    if (J < 2) throw PreconditionError("needs J >= 2");
    require_degree(d, J);
    {
        // crude bound on the product degree: (e-1) twists per level of degree
        // <= d^J, exponents <= e-1
        u128 dj = 1;
        for (u64 j = 0; j < J; ++j) dj *= d;
        const u128 total = static_cast<u128>(e - 1) * (e - 1) * (J - 1) * dj;
        if (total > kDegreeBudget) throw BudgetError("polynomial degree budget exceeded");
    }

    const auto iter = iterate_family(F, d, J);
    const auto& gammas_all = F.roots_of_unity(e);
    std::vector<u64> gammas;  // the non-trivial roots
    for (u64 g : gammas_all)
        if (g != 1) gammas.push_back(g);

    std::vector<Poly> twists;  // indexed [ (j-2)*|gammas| + gi ]
    for (u64 j = 2; j <= J; ++j)
        for (u64 g : gammas) twists.push_back(twist_of(F, iter[j], g));

    const std::size_t slots = twists.size();
    std::mt19937_64 rng(seed);
    auto run_collection = [&](const std::vector<u64>& alpha) -> bool {
        ++rep.checks;
        Poly prod = Poly::constant(F, 1);
        for (std::size_t s = 0; s < slots; ++s)
            for (u64 i = 0; i < alpha[s]; ++i) prod = poly_mul(F, prod, twists[s]);
        if (!is_perfect_eth_power(F, prod, e)) return true;
        rep.pass = false;
        std::ostringstream os;
        os << "p=" << p << " d=" << d << " alpha=[";
        for (std::size_t s = 0; s < slots; ++s) os << (s ? "," : "") << alpha[s];
        os << "]";
        rep.counterexample = os.str();
        return false;
    };

    if (!run_collection(std::vector<u64>(slots, 1))) return rep;
    for (u64 n = 0; n < samples; ++n) {
        std::vector<u64> alpha(slots, 0);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& a : alpha) {
                a = rng() % e;
                nonzero |= a != 0;
            }
        }
        if (!run_collection(alpha)) return rep;
    }
    return rep;
}

}  // namespace polygraph
