#pragma once

#include <optional>
#include <vector>

#include "slt/numbers.hpp"

namespace slt {

// Plus continued fraction [q1,q2,...] = q1 + 1/(q2 + 1/(...)).
// Canonical form: all terms >= 1 and the last term >= 2 whenever there is
// more than one term; this makes expansions unique.
struct PlusCF {
    std::vector<Int> terms;
};

// Minus (Hirzebruch-Jung) continued fraction [[q1,q2,...]] = q1 - 1/(q2 - ...),
// all terms >= 2.
struct MinusCF {
    std::vector<Int> terms;
};

enum class CFKind { Plus, Minus };

// Remainders and convergents of the Euclidean algorithm attached to a
// continued fraction.
//
// plus kind:  r_{i-1} = q_i r_i + r_{i+1},  P_i = q_i P_{i-1} + P_{i-2},
//             Q_i = q_i Q_{i-1} + Q_{i-2},  P_{-1}=0, P_0=1, Q_{-1}=1, Q_0=0
// minus kind: r_{i-1} = q_i r_i - r_{i+1},  P_i = q_i P_{i-1} - P_{i-2},
//             Q_i = q_i Q_{i-1} - Q_{i-2},  P_{-1}=0, P_0=1, Q_{-1}=-1, Q_0=0
//
// remainders holds r_0..r_{k+1}; convP/convQ hold P_{-1}..P_k (offset by one,
// so convP[i+1] = P_i).
struct EuclidData {
    CFKind kind = CFKind::Plus;
    std::vector<Int> remainders;
    std::vector<Int> convP;
    std::vector<Int> convQ;

    int k() const { return static_cast<int>(convP.size()) - 2; }
    const Int& r(int i) const { return remainders.at(i); }
    const Int& P(int i) const { return convP.at(i + 1); }
    const Int& Q(int i) const { return convQ.at(i + 1); }
};

PlusCF plus_expand(const Fraction& f);
MinusCF minus_expand(const Fraction& f);
Fraction eval_plus(const PlusCF& cf);
Fraction eval_minus(const MinusCF& cf);

// Tables for an explicit seed (r0, r1); requires gcd(r0,r1)=1 and that the
// expansion of r0/r1 reproduces cf.
EuclidData euclid_data(const PlusCF& cf, const Int& r0, const Int& r1);
EuclidData euclid_data(const MinusCF& cf, const Int& r0, const Int& r1);

// Positionwise comparison of a symbolic prediction against the computed
// expansion; `mismatch` lists differing positions (0-based, -1 for a length
// mismatch).
struct PredictionReport {
    std::vector<Int> predicted;
    bool matches = false;
    std::vector<int> mismatch;
};

// Minus expansions of m/a and m/b (b = m-a) for coprime m/2 < a < m, both
// computed directly and predicted by the classical splice formulas from the
// plus expansion of a/b.  The predicted tail of the m/b chain is transcribed
// as printed in the source formulas; soundness is judged against the direct
// expansion (the even-k tail is a known erratum, see verify).
struct TransformResult {
    PlusCF ab;
    MinusCF m_over_a;
    MinusCF m_over_b;
    PredictionReport pred_a;
    PredictionReport pred_b;
};

TransformResult riemenschneider_transform(const Int& a, const Int& m);

// Plus expansion of (dma-1)/(dmb+1) for m = a+b, a > b >= 1, gcd(a,b)=1,
// d >= 1, with the symbolic four-case prediction.  Single-term inputs (k=1)
// are flagged unsupported-by-formula: the case displays collide there.
struct ClassTCFResult {
    PlusCF truth;
    bool formula_applicable = false;
    PredictionReport pred;
};

ClassTCFResult class_t_cf(const Int& a, const Int& b, const Int& d);

}  // namespace slt
