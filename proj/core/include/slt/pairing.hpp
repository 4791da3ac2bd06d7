#pragma once

#include "slt/fullsheaf.hpp"

namespace slt {

struct SummaryStats {
    Int sigma_o = 0;   // sum of odd-part multiplicities times lambda
    Int tau_e = 0;     // sum of even-part multiplicities times mu
    Int sigma_bar = 0; // same with lambda-bar
    Int tau_bar = 0;   // same with mu-bar
};

SummaryStats stats(const SltModel& model, const DivisorVector& dv);

// Bilinear forms on the odd / even-bar blocks.
Int form_O(const SltModel& model, const std::map<ChainIndex, Int>& a,
           const std::map<ChainIndex, Int>& b);
Int form_E(const SltModel& model, const std::map<ChainIndex, Int>& a,
           const std::map<ChainIndex, Int>& b);

// Local intersection number of two decomposed vectors through the closed
// form, and independently through the pullback tables of the resolved charts
// (which only see the totals).
Rat pair_closed_form(const SltModel& model, const DivisorVector& x, const DivisorVector& y);
Rat toric_pair_oracle(const SltModel& model, const std::map<ChainIndex, Int>& x,
                      const std::map<ChainIndex, Int>& y);

// Special test elements; all carry their canonical odd/even split.
DivisorVector phi(const SltModel& model, int i, long j);
DivisorVector theta(const SltModel& model, int i, long j);
DivisorVector psi(const SltModel& model, const ChainIndex& iota, const ChainIndex& eta);

Rat nu_squared(const SltModel& model, const Int& n);

// The two self-intersection bounds.  The first range's inequality is
// evaluated in both directions: the corrected one (>=, the direction the
// recursion actually proves) and the one as printed (<=).
struct NuBoundsReport {
    bool low_range = false;
    int i_n = 0;
    long j_n = 0;
    Rat nu_sq;
    Rat bound;
    bool corrected_holds = false;
    bool printed_holds = false;  // low range only
};

NuBoundsReport nu_squared_bounds(const SltModel& model, const Int& n);

// Replay of the recursion step that the bounds' proofs use at n, checking the
// vector identity, the vanishing (or prescribed) cross term, and the square
// bookkeeping.
struct CrossTermReport {
    std::string step;           // "base", "psi", "phi", "theta"
    bool applicable = false;
    bool identity_ok = false;   // nu(n) == nu(n') +/- element
    bool support_ok = false;    // support-order premises of the vanishing
    Rat cross_value;
    Int expected_cross;
    bool cross_ok = false;
    bool square_ok = false;     // nu(n)^2 == nu(n')^2 +/- (element^2, cross)
};

CrossTermReport cross_term_check(const SltModel& model, const Int& n);

}  // namespace slt
