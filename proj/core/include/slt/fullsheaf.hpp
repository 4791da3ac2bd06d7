#pragma once

#include "slt/divisor.hpp"
#include "slt/expansions.hpp"

namespace slt {

enum class ChartSide { O, E };

// Raised when the independent minimizer search finds no componentwise
// dominated minimum (that would falsify the degree theorem's premise) or when
// the search space is malformed.
struct oracle_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TPair {
    Int s, t;
    auto operator<=>(const TPair&) const = default;
};

// The degree vector nu(n): odd part from the lambda-expansion, even part from
// the mu-expansion (both charts at once in the non-normal case).
DivisorVector nu(const SltModel& model, const Int& n);

// Totals of nu(n) over the index set (missing indices are zero).
std::map<ChainIndex, Int> fullsheaf_degrees(const SltModel& model, const Int& n);

// Independent computation of the same vector: the componentwise alpha-minimal
// effective class with the prescribed residue, found by exact shortest-path
// minimization over the residue graph.  Throws oracle_failure when no
// dominated minimum exists.
std::map<ChainIndex, Int> fullsheaf_oracle(const SltModel& model, const Int& n);

// Chart-wise degrees of the non-normal model (lambda side on chart O, mu side
// on chart E) and the matching chart oracle.
std::map<ChainIndex, Int> nonnormal_degrees(const SltModel& model, const Int& n, ChartSide side);
std::map<ChainIndex, Int> nonnormal_oracle(const SltModel& model, const Int& n, ChartSide side);

// Discrepancy vector alpha(nu) per index.
std::map<ChainIndex, Rat> alpha_vector(const SltModel& model,
                                       const std::map<ChainIndex, Int>& total);

// All (s, t) minimizing s + t in the congruence class of n (normal models).
std::vector<TPair> t_min_bruteforce(const SltModel& model, const Int& n);
std::vector<TPair> t_min_closed_form(const SltModel& model, const Int& n);

// The (s, t) statistics of a divisor vector under the (k+1)-block split.
TPair stat_pair(const SltModel& model, const std::map<ChainIndex, Int>& total);

// Class of |nK| in expansion terms: (-n) mod m in [0, m-1]; 0 means the class
// is trivial and the general member misses the singular point.
Int member_class_of_nk(const SltModel& model, const Int& n);

// One summand of a general member: `count` transverse curves at `index`
// (distinct generic ones when pencil is set) with curve-class exponents
// (lam, mu).
struct GeneralMember {
    ChainIndex index;
    Int count;
    bool pencil = false;
    Int lam, mu;
};

std::vector<GeneralMember> general_member_report(const SltModel& model, const Int& n);

}  // namespace slt
