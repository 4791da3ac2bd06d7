#pragma once

#include "slt/pairing.hpp"

namespace slt {

// Two-term recurrence N_j = L_j N_{j-1} + N_{j-2} seeded with N_{-1} = N_0 = N
// along a composition (L_1, ..., L_J); B_of returns N_J.
Int B_of(const std::vector<Int>& composition, const Int& N);

// Maximum of B_of over all compositions of M (exhaustive for small M,
// memoized branch recursion beyond).
Int B_max(const Int& M, const Int& N);

// Gorenstein-index inequality at n: index(X) <= B(D.D' + 1, n) for general
// members D, D' of |nK| (the minimal pairing among members, so the strongest
// instance).  DD' is integral on all swept models; a non-integral value is
// flagged instead of rounded.
struct IndexBoundReport {
    Int index;
    Int n_star;        // class of |nK| in expansion terms
    Rat dd_prime;      // pairing of two general members
    bool dd_integral = false;
    Int bound;         // B(DD'+1, n); 0 when not evaluated
    bool ok = false;
    bool trivial = false;  // m | n: members miss the singular point
};

IndexBoundReport verify_index_bound(const SltModel& model, const Int& n);

}  // namespace slt
