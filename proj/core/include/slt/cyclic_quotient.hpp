#pragma once

#include <array>
#include <vector>

#include "slt/contfrac.hpp"

namespace slt {

// Lattice point in the fan plane.
using Ray = std::array<Int, 2>;

// Chain of exceptional rational curves of the minimal resolution of the
// cyclic quotient singularity of type (r, s): self-intersections -q_i with
// r/s = [[q_1,...,q_k]], rays v_0..v_{k+1} where v_0 = (1,0),
// v_{k+1} = (r-s, r) and v_i = (P_{i-1}-Q_{i-1}, P_{i-1}).
struct ResolutionChain {
    std::vector<Ray> rays;      // v_0 .. v_{k+1}
    std::vector<Int> self_int;  // -q_1 .. -q_k

    int curve_count() const { return static_cast<int>(self_int.size()); }
};

struct CyclicQuotientSurface {
    Int r, s;
    MinusCF cf;
    EuclidData euclid;  // minus tables seeded with (r, s)

    int k() const { return static_cast<int>(cf.terms.size()); }
    // curve-class exponents at chain position i (1-based)
    Int lambda(int i) const { return euclid.P(i - 1); }
    Int mu(int i) const { return euclid.r(i); }
};

// k x k table of pullback coefficients: alpha[i][j] (0-based) is the
// coefficient of the j+1-st exceptional curve in the pullback of the i+1-st
// transverse curve class; equals lambda_min * mu_max / r.
struct PullbackMatrix {
    std::vector<std::vector<Rat>> alpha;
};

std::pair<CyclicQuotientSurface, ResolutionChain> resolve(const Int& r, const Int& s);

// Tridiagonal intersection form: diagonal -q_i, adjacent 1.
std::vector<std::vector<Int>> intersection_matrix(const ResolutionChain& chain);

PullbackMatrix pullback_coeffs(const CyclicQuotientSurface& surface);

// Row `curve` (1-based) of the pullback table obtained independently by
// solving (C + sum_j x_j E_j) . E_h = 0 for all h, i.e. M x = -e_curve with
// M the intersection matrix.
std::vector<Rat> pullback_oracle(const CyclicQuotientSurface& surface, int curve);

// Local pairing sum_{i,j} nu_i nu'_j alpha[i][j] of two transverse curve
// configurations given by multiplicities per chain position.
Rat pair_divisors(const CyclicQuotientSurface& surface, const std::vector<Int>& nu,
                  const std::vector<Int>& nu_prime);

// Residue (s*p + q) mod r of the monomial exponent pair (p, q).
Int semi_invariant_weight(const CyclicQuotientSurface& surface, const Int& p, const Int& q);

}  // namespace slt
