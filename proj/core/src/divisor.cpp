#include "slt/divisor.hpp"

namespace slt {

namespace {

void add_to(std::map<ChainIndex, Int>& m, const ChainIndex& ix, const Int& v) {
    if (v == 0) return;
    auto it = m.find(ix);
    if (it == m.end()) {
        m.emplace(ix, v);
        return;
    }
    it->second += v;
    if (it->second == 0) m.erase(it);
}

}  // namespace

std::map<ChainIndex, Int> DivisorVector::total() const {
    std::map<ChainIndex, Int> t = odd_part;
    for (const auto& [ix, v] : even_part) add_to(t, ix, v);
    return t;
}

bool DivisorVector::is_effective() const {
    for (const auto& [ix, v] : odd_part)
        if (v < 0) return false;
    for (const auto& [ix, v] : even_part)
        if (v < 0) return false;
    return true;
}

DivisorVector& DivisorVector::add_odd(const ChainIndex& ix, const Int& v) {
    add_to(odd_part, ix, v);
    return *this;
}

DivisorVector& DivisorVector::add_even(const ChainIndex& ix, const Int& v) {
    add_to(even_part, ix, v);
    return *this;
}

DivisorVector DivisorVector::operator+(const DivisorVector& o) const {
    DivisorVector r = *this;
    for (const auto& [ix, v] : o.odd_part) add_to(r.odd_part, ix, v);
    for (const auto& [ix, v] : o.even_part) add_to(r.even_part, ix, v);
    return r;
}

DivisorVector DivisorVector::operator-(const DivisorVector& o) const {
    DivisorVector r = *this;
    for (const auto& [ix, v] : o.odd_part) add_to(r.odd_part, ix, -v);
    for (const auto& [ix, v] : o.even_part) add_to(r.even_part, ix, -v);
    return r;
}

bool support_below(const std::map<ChainIndex, Int>& a, const std::map<ChainIndex, Int>& b) {
    if (a.empty() || b.empty()) return true;
    return a.rbegin()->first <= b.begin()->first;
}

void validate_parts(const SltModel& model, const DivisorVector& dv) {
    for (const auto& [ix, v] : dv.odd_part)
        if (ix.i % 2 == 0 || !model.contains(ix))
            throw std::invalid_argument("DivisorVector: odd part off I_o at " + to_string(ix));
    const ChainIndex bd = model.is_normal() ? model.boundary() : ChainIndex{0, 0};
    for (const auto& [ix, v] : dv.even_part) {
        const bool even_ok = ix.i % 2 == 0 && model.contains(ix);
        const bool boundary_ok = model.is_normal() && ix == bd;
        if (!even_ok && !boundary_ok)
            throw std::invalid_argument("DivisorVector: even part off I_e-bar at " + to_string(ix));
    }
}

}  // namespace slt
