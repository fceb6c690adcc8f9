#ifndef POLYGRAPH_POLY_HPP
#define POLYGRAPH_POLY_HPP

#include <utility>
#include <vector>

#include "polygraph/field.hpp"

namespace polygraph {

// Dense univariate polynomial over F_p. Coefficients ascending by degree and
// always trimmed: the leading coefficient is nonzero, the zero polynomial has
// an empty coefficient vector. Values are immutable in practice; all
// operations return fresh polynomials.
struct Poly {
    std::vector<u64> coeffs;

    bool is_zero() const noexcept { return coeffs.empty(); }
    // -1 for the zero polynomial
    long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
    u64 coeff(std::size_t i) const noexcept { return i < coeffs.size() ? coeffs[i] : 0; }
    u64 leading() const noexcept { return coeffs.empty() ? 0 : coeffs.back(); }

    bool operator==(const Poly&) const = default;

    static Poly zero() { return {}; }
    static Poly constant(const Field& F, u64 c);
    static Poly identity();  // the monomial X
    // reduces entries mod p and trims trailing zeros
    static Poly from_coeffs(const Field& F, std::vector<u64> cs);
};

// Degree guard for the iterate/lemma machinery: degrees grow like d^k, so
// fail deterministically instead of exhausting memory.
inline constexpr u64 kDegreeBudget = u64{1} << 20;

u64 poly_eval(const Field& F, const Poly& f, u64 x);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scal(const Field& F, const Poly& a, u64 c);

// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);

Poly poly_derivative(const Field& F, const Poly& a);
Poly poly_monic(const Field& F, const Poly& a);

// Monic gcd via Euclid; rejects the (0, 0) pair.
Poly poly_gcd(const Field& F, Poly a, Poly b);

// k-th member of the sequence I_0 = X, I_k = I_{k-1}^d + X. Its value at a
// equals the k-th iterate of a under x -> x^d + a.
Poly iterate_poly(const Field& F, u64 d, u64 k);

// gamma * iterate_poly(d, k) - X; gamma must lie in the root-of-unity group
// of order gcd(d, p-1). Roots are the points whose k-step return value is
// gamma^{-1} times the start.
Poly twist_poly(const Field& F, u64 d, u64 k, u64 gamma);

// (multiplicity, monic squarefree factor) pairs with multiplicities
// ascending, factors of positive degree and pairwise coprime, such that
// P = lc(P) * prod factor^multiplicity.
std::vector<std::pair<u64, Poly>> squarefree_decomposition(const Field& F, const Poly& P);

// True iff every irreducible factor multiplicity of P is divisible by e,
// i.e. P is an e-th power in the polynomial ring over the algebraic closure
// (scalars are e-th powers there, so the leading coefficient is ignored).
// P must be nonzero and e >= 2.
bool is_perfect_eth_power(const Field& F, const Poly& P, u64 e);

}  // namespace polygraph

#endif
