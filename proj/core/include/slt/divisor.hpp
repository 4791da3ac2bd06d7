#pragma once

#include "slt/model.hpp"

namespace slt {

// Integer-valued function on the index set together with its odd/even
// decomposition.  The odd part is supported on I_o, the even part on
// I_e plus the boundary slot (k+1, d) in the normal case.  Entries may be
// negative (the special elements of the pairing layer use that); zero entries
// are pruned.
struct DivisorVector {
    std::map<ChainIndex, Int> odd_part;
    std::map<ChainIndex, Int> even_part;

    std::map<ChainIndex, Int> total() const;
    bool is_effective() const;

    DivisorVector& add_odd(const ChainIndex& ix, const Int& v);
    DivisorVector& add_even(const ChainIndex& ix, const Int& v);

    DivisorVector operator+(const DivisorVector& o) const;
    DivisorVector operator-(const DivisorVector& o) const;
    bool operator==(const DivisorVector& o) const = default;
};

// support-wise checks used by the intersection corollaries: every index in
// the support of `a` precedes every index in the support of `b`
bool support_below(const std::map<ChainIndex, Int>& a, const std::map<ChainIndex, Int>& b);

void validate_parts(const SltModel& model, const DivisorVector& dv);

}  // namespace slt
