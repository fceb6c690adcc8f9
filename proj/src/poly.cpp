#include "polygraph/poly.hpp"

#include <algorithm>
#include <numeric>

namespace polygraph {

namespace {

void trim(std::vector<u64>& cs) {
    while (!cs.empty() && cs.back() == 0) cs.pop_back();
}

void check_budget(u128 degree) {
    if (degree > kDegreeBudget)
        throw BudgetError("polynomial degree budget exceeded");
}

}  // namespace

Poly Poly::constant(const Field& F, u64 c) {
    Poly r;
    if (F.reduce(c) != 0) r.coeffs = {F.reduce(c)};
    return r;
}

Poly Poly::identity() { return Poly{{0, 1}}; }

Poly Poly::from_coeffs(const Field& F, std::vector<u64> cs) {
    for (u64& c : cs) c = F.reduce(c);
    trim(cs);
    return Poly{std::move(cs)};
}

u64 poly_eval(const Field& F, const Poly& f, u64 x) {
    u64 acc = 0;
    for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
        acc = F.add(F.mul(acc, x), *it);
    return acc;
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    std::vector<u64> cs(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = F.add(a.coeff(i), b.coeff(i));
    trim(cs);
    return Poly{std::move(cs)};
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
    std::vector<u64> cs(std::max(a.coeffs.size(), b.coeffs.size()), 0);
    for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = F.sub(a.coeff(i), b.coeff(i));
    trim(cs);
    return Poly{std::move(cs)};
}

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    check_budget(static_cast<u128>(a.coeffs.size() - 1) + (b.coeffs.size() - 1));
    std::vector<u64> cs(a.coeffs.size() + b.coeffs.size() - 1, 0);
    const u64 p = F.modulus();
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        const u64 ai = a.coeffs[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
            if (b.coeffs[j] == 0) continue;
            cs[i + j] = (cs[i + j] + static_cast<u128>(ai) * b.coeffs[j]) % p;
        }
    }
    trim(cs);
    return Poly{std::move(cs)};
}

Poly poly_scal(const Field& F, const Poly& a, u64 c) {
    c = F.reduce(c);
    if (c == 0) return Poly::zero();
    Poly r = a;
    for (u64& x : r.coeffs) x = F.mul(x, c);
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    if (a.degree() < b.degree()) return {Poly::zero(), a};
    const u64 lead_inv = F.inv(b.leading());
    std::vector<u64> rem = a.coeffs;
    std::vector<u64> quo(a.coeffs.size() - b.coeffs.size() + 1, 0);
    for (std::size_t k = quo.size(); k-- > 0;) {
        const u64 q = F.mul(rem[k + b.coeffs.size() - 1], lead_inv);
        if (q == 0) continue;
        quo[k] = q;
        for (std::size_t j = 0; j < b.coeffs.size(); ++j)
            rem[k + j] = F.sub(rem[k + j], F.mul(q, b.coeffs[j]));
    }
    trim(rem);
    trim(quo);
    return {Poly{std::move(quo)}, Poly{std::move(rem)}};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) {
    return poly_divmod(F, a, b).second;
}

Poly poly_derivative(const Field& F, const Poly& a) {
    if (a.coeffs.size() <= 1) return Poly::zero();
    std::vector<u64> cs(a.coeffs.size() - 1);
    for (std::size_t i = 1; i < a.coeffs.size(); ++i)
        cs[i - 1] = F.mul(a.coeffs[i], F.reduce(i));
    trim(cs);
    return Poly{std::move(cs)};
}

Poly poly_monic(const Field& F, const Poly& a) {
    if (a.is_zero() || a.leading() == 1) return a;
    return poly_scal(F, a, F.inv(a.leading()));
}

Poly poly_gcd(const Field& F, Poly a, Poly b) {
    if (a.is_zero() && b.is_zero())
        throw PreconditionError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(F, a);
}

namespace {

Poly poly_pow_small(const Field& F, const Poly& base, u64 e) {
    // e stays tiny here (the map degree d); repeated multiplication is fine.
    Poly r = Poly::constant(F, 1);
    for (u64 i = 0; i < e; ++i) r = poly_mul(F, r, base);
    return r;
}

}  // namespace

Poly iterate_poly(const Field& F, u64 d, u64 k) {
    if (d < 2) throw PreconditionError("map degree must be >= 2");
    u128 deg = 1;
    for (u64 i = 0; i < k; ++i) {
        deg *= d;
        check_budget(deg);
    }
    Poly r = Poly::identity();
    const Poly x = Poly::identity();
    for (u64 i = 0; i < k; ++i) r = poly_add(F, poly_pow_small(F, r, d), x);
    return r;
}

Poly twist_poly(const Field& F, u64 d, u64 k, u64 gamma) {
    const u64 e = std::gcd(d, F.modulus() - 1);
    if (gamma >= F.modulus() || F.pow(gamma, e) != 1)
        throw PreconditionError("gamma is not a root of unity of order dividing gcd(d, p-1)");
    return poly_sub(F, poly_scal(F, iterate_poly(F, d, k), gamma), Poly::identity());
}

namespace {

// P(X) with only X^{pi} terms -> Q with Q(X^p) = P(X). Over a prime field
// Q^p = P as well, because coefficients are Frobenius-fixed.
Poly contract_pth(const Field& F, const Poly& P) {
    const u64 p = F.modulus();
    std::vector<u64> cs;
    cs.reserve(P.coeffs.size() / p + 1);
    for (std::size_t i = 0; i < P.coeffs.size(); ++i) {
        if (i % p == 0)
            cs.push_back(P.coeffs[i]);
        else if (P.coeffs[i] != 0)
            throw Error("internal: contraction of a polynomial with non-p-power terms");
    }
    trim(cs);
    return Poly{std::move(cs)};
}

void sqfree_rec(const Field& F, const Poly& f, u64 mult_scale,
                std::vector<std::pair<u64, Poly>>& out) {
    // f monic, nonconstant
    Poly fp = poly_derivative(F, f);
    if (fp.is_zero()) {
        sqfree_rec(F, contract_pth(F, f), mult_scale * F.modulus(), out);
        return;
    }
    Poly c = poly_gcd(F, f, fp);
    Poly w = poly_divmod(F, f, c).first;  // product of factors with multiplicity coprime to p
    u64 i = 1;
    while (w.degree() > 0) {
        Poly y = poly_gcd(F, w, c);
        Poly z = poly_divmod(F, w, y).first;  // factors of multiplicity exactly i
        if (z.degree() > 0) out.emplace_back(i * mult_scale, std::move(z));
        w = std::move(y);
        c = poly_divmod(F, c, w).first;
        ++i;
    }
    // what remains of c has all multiplicities divisible by p
    if (c.degree() > 0) sqfree_rec(F, contract_pth(F, c), mult_scale * F.modulus(), out);
}

}  // namespace

std::vector<std::pair<u64, Poly>> squarefree_decomposition(const Field& F, const Poly& P) {
    if (P.is_zero()) throw PreconditionError("zero polynomial");
    std::vector<std::pair<u64, Poly>> out;
    if (P.degree() == 0) return out;
    sqfree_rec(F, poly_monic(F, P), 1, out);
    // merge equal multiplicities arising from different contraction depths
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<u64, Poly>> merged;
    for (auto& [m, f] : out) {
        if (!merged.empty() && merged.back().first == m)
            merged.back().second = poly_mul(F, merged.back().second, f);
        else
            merged.emplace_back(m, std::move(f));
    }
    return merged;
}

bool is_perfect_eth_power(const Field& F, const Poly& P, u64 e) {
    if (P.is_zero()) throw PreconditionError("zero polynomial");
    if (e < 2) throw PreconditionError("power test needs e >= 2");
    if (P.degree() == 0) return true;
    if (static_cast<u64>(P.degree()) % e != 0) return false;
    for (const auto& [mult, factor] : squarefree_decomposition(F, P)) {
        (void)factor;
        if (mult % e != 0) return false;
    }
    return true;
}

}  // namespace polygraph
