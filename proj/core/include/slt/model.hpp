#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "slt/cyclic_quotient.hpp"

namespace slt {

// Index (i, j) of an exceptional curve slot; ordered lexicographically.
struct ChainIndex {
    int i = 0;
    int j = 0;
    auto operator<=>(const ChainIndex&) const = default;
};

std::string to_string(const ChainIndex& ix);

// rho and the split weights; bar/hat entries are only populated on the side
// where they are defined (everywhere in the normal case, on I_o / I_e
// respectively in the non-normal case).
struct WeightEntry {
    Int rho = 0;
    Int lam_bar = 0, lam_hat = 0, lam = 0;
    Int mu_bar = 0, mu_hat = 0, mu = 0;
};

// One resolved chart together with the placement of model indices on its
// exceptional chain (positions are 1-based).
struct Chart {
    CyclicQuotientSurface surface;
    ResolutionChain chain;
    std::vector<ChainIndex> order;     // chain order, position p at order[p-1]
    std::map<ChainIndex, int> pos;

    int position(const ChainIndex& ix) const;
};

// Combinatorial model of either singularity family:
//  - ClassT:    the quotient of type (dm^2, dma-1), parameters (a, d, m)
//  - NonNormal: the quotient X_{a,m} of a normal crossing point, normalized
//               into the two charts of types (m, a) and (m, b)
//
// The working plus continued fraction of a/b always has even length: inputs
// whose canonical expansion is odd are re-expanded [.., q] -> [.., q-1, 1]
// (odd_canonical records this).  All weight tables are validated against the
// chart resolutions at construction time.
class SltModel {
public:
    enum class Kind { ClassT, NonNormal };

    static SltModel build_class_t(long a, long d, long m);
    static SltModel build_nonnormal(long a, long m);

    Kind kind() const { return kind_; }
    bool is_normal() const { return kind_ == Kind::ClassT; }

    long a() const { return a_; }
    long d() const { return d_; }
    long m() const { return m_; }
    long b() const { return b_; }
    long a_inverse() const { return a_inv_; }
    long b_inverse() const { return b_inv_; }
    bool odd_canonical() const { return odd_canonical_; }

    int k() const { return static_cast<int>(q_.size()); }
    const std::vector<long>& q() const { return q_; }
    long q(int i) const { return q_.at(i - 1); }
    const EuclidData& plus_euclid() const { return euclid_; }
    // sigma(i) = P_i + Q_i, defined for -1 <= i <= k; sigma(k) = m
    const Int& sigma(int i) const { return sigma_.at(i + 1); }

    const std::vector<ChainIndex>& index_lex() const { return lex_; }
    const std::vector<ChainIndex>& odd_indices() const { return odd_; }
    const std::vector<ChainIndex>& even_indices() const { return even_; }
    // I_e together with the boundary slot in the normal case
    const std::vector<ChainIndex>& even_bar_indices() const { return even_bar_; }

    bool contains(const ChainIndex& ix) const { return weights_.count(ix) > 0; }
    const WeightEntry& weight(const ChainIndex& ix) const;
    const Int& lambda(const ChainIndex& ix) const { return weight(ix).lam; }
    const Int& mu(const ChainIndex& ix) const { return weight(ix).mu; }

    // normal case: the last odd-block slot (k+1, d) closing the even side
    ChainIndex boundary() const;
    // where an even-side formula term delta^{i,j} actually lands
    ChainIndex e_slot(int i, long j) const;

    // group order: dm^2 (normal) or m (non-normal)
    const Int& group_order() const { return order_; }

    // main chart: the single chart of a normal model / chart O of a
    // non-normal one; second chart only for non-normal models.
    const Chart& chart_main() const { return main_; }
    const Chart& chart_second() const;
    // chart carrying the given index
    const Chart& chart_of(const ChainIndex& ix) const;

    // split of the (k+1)-block used for the (s,t) statistics: slots with
    // j <= block_cut count to the odd side (ceil(d/2) resp. floor(d/2) for
    // even resp. odd canonical expansions; see verify for the calibration)
    long block_cut() const;
    bool in_stat_odd(const ChainIndex& ix) const;

    Int gorenstein_index() const;

private:
    SltModel() = default;
    void finish_common();
    void validate_class_t();
    void validate_nonnormal();

    Kind kind_ = Kind::ClassT;
    long a_ = 0, d_ = 1, m_ = 0, b_ = 0;
    long a_inv_ = 0, b_inv_ = 0;
    bool odd_canonical_ = false;
    std::vector<long> q_;
    EuclidData euclid_;
    std::vector<Int> sigma_;
    Int order_ = 0;

    std::vector<ChainIndex> lex_, odd_, even_, even_bar_;
    std::map<ChainIndex, WeightEntry> weights_;
    Chart main_;
    std::optional<Chart> second_;
};

struct Neighbors {
    std::optional<ChainIndex> left, right;
};

// Chain-adjacent indices within the chart carrying ix.
Neighbors chain_neighbors(const SltModel& model, const ChainIndex& ix);

// Validation of the gluing conventions around the top of the even side:
// the even-row weight formulas extended to j = q_k reproduce the weights of
// the boundary slot (k+1, d); they match (k+1, 1) only when d = 1.
struct BoundaryReport {
    Int extended_mu, extended_lambda;
    bool matches_boundary = false;     // == weights at (k+1, d)
    bool matches_first_block = false;  // == weights at (k+1, 1)
    bool rho_extension_unit = false;   // rho^{k+1}_j == 1 for all j <= d
};

BoundaryReport boundary_identities(const SltModel& model);

}  // namespace slt
