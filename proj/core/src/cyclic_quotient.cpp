#include "slt/cyclic_quotient.hpp"

namespace slt {

namespace {

Int det2(const Ray& u, const Ray& v) { return u[0] * v[1] - u[1] * v[0]; }

}  // namespace

std::pair<CyclicQuotientSurface, ResolutionChain> resolve(const Int& r, const Int& s) {
    if (s <= 0 || s >= r || gcd(r, s) != 1)
        throw std::invalid_argument("resolve: requires 0 < s < r with gcd(r,s)=1");

    CyclicQuotientSurface surf;
    surf.r = r;
    surf.s = s;
    surf.cf = minus_expand(Fraction(r, s));
    surf.euclid = euclid_data(surf.cf, r, s);

    const int k = surf.k();
    ResolutionChain chain;
    chain.rays.reserve(k + 2);
    chain.rays.push_back({1, 0});
    for (int i = 1; i <= k; ++i)
        chain.rays.push_back({surf.euclid.P(i - 1) - surf.euclid.Q(i - 1), surf.euclid.P(i - 1)});
    chain.rays.push_back({r - s, r});
    for (int i = 1; i <= k; ++i) chain.self_int.push_back(-surf.cf.terms[i - 1]);

    for (int i = 1; i <= k; ++i) {
        const Ray sum = {chain.rays[i - 1][0] + chain.rays[i + 1][0],
                         chain.rays[i - 1][1] + chain.rays[i + 1][1]};
        if (sum[0] != surf.cf.terms[i - 1] * chain.rays[i][0] ||
            sum[1] != surf.cf.terms[i - 1] * chain.rays[i][1])
            throw internal_error("resolve: chain relation violated");
    }
    for (size_t i = 0; i + 1 < chain.rays.size(); ++i) {
        Int d = det2(chain.rays[i], chain.rays[i + 1]);
        if (d != 1 && d != -1) throw internal_error("resolve: adjacent rays not unimodular");
    }
    return {std::move(surf), std::move(chain)};
}

std::vector<std::vector<Int>> intersection_matrix(const ResolutionChain& chain) {
    const int k = chain.curve_count();
    std::vector<std::vector<Int>> m(k, std::vector<Int>(k, 0));
    for (int i = 0; i < k; ++i) {
        m[i][i] = chain.self_int[i];
        if (i + 1 < k) {
            m[i][i + 1] = 1;
            m[i + 1][i] = 1;
        }
    }
    return m;
}

PullbackMatrix pullback_coeffs(const CyclicQuotientSurface& surface) {
    const int k = surface.k();
    PullbackMatrix pm;
    pm.alpha.assign(k, std::vector<Rat>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
            const int lo = std::min(i, j), hi = std::max(i, j);
            Rat v(surface.lambda(lo) * surface.mu(hi), surface.r);
            v.canonicalize();
            pm.alpha[i - 1][j - 1] = v;
        }
    return pm;
}

std::vector<Rat> pullback_oracle(const CyclicQuotientSurface& surface, int curve) {
    const int k = surface.k();
    if (curve < 1 || curve > k) throw std::invalid_argument("pullback_oracle: curve out of range");

    // Solve the tridiagonal system M x = -e_curve exactly (Thomas algorithm).
    std::vector<Rat> diag(k), rhs(k, Rat(0));
    for (int i = 0; i < k; ++i) diag[i] = Rat(-surface.cf.terms[i]);
    rhs[curve - 1] = Rat(-1);

    for (int i = 1; i < k; ++i) {
        if (diag[i - 1] == 0) throw internal_error("pullback_oracle: singular pivot");
        Rat w = Rat(1) / diag[i - 1];  // off-diagonals are 1
        diag[i] -= w;
        rhs[i] -= w * rhs[i - 1];
        diag[i].canonicalize();
        rhs[i].canonicalize();
    }
    std::vector<Rat> x(k);
    if (diag[k - 1] == 0) throw internal_error("pullback_oracle: singular pivot");
    x[k - 1] = rhs[k - 1] / diag[k - 1];
    for (int i = k - 2; i >= 0; --i) {
        x[i] = (rhs[i] - x[i + 1]) / diag[i];
        x[i].canonicalize();
    }
    return x;
}

Rat pair_divisors(const CyclicQuotientSurface& surface, const std::vector<Int>& nu,
                  const std::vector<Int>& nu_prime) {
    const int k = surface.k();
    if (static_cast<int>(nu.size()) != k || static_cast<int>(nu_prime.size()) != k)
        throw std::invalid_argument("pair_divisors: multiplicity vectors must have chain length");
    Int acc = 0;  // r * pairing
    for (int i = 1; i <= k; ++i) {
        if (nu[i - 1] == 0) continue;
        for (int j = 1; j <= k; ++j) {
            if (nu_prime[j - 1] == 0) continue;
            const int lo = std::min(i, j), hi = std::max(i, j);
            acc += nu[i - 1] * nu_prime[j - 1] * surface.lambda(lo) * surface.mu(hi);
        }
    }
    Rat v(acc, surface.r);
    v.canonicalize();
    return v;
}

Int semi_invariant_weight(const CyclicQuotientSurface& surface, const Int& p, const Int& q) {
    if (p < 0 || q < 0) throw std::invalid_argument("semi_invariant_weight: exponents must be >= 0");
    return mod(surface.s * p + q, surface.r);
}

}  // namespace slt
