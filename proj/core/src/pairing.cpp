#include "slt/pairing.hpp"

#include <algorithm>

namespace slt {

namespace {

// lex predecessor within the odd block resp. the even-bar block; this is the
// chain-adjacent curve on the relevant side in the normal case
std::optional<ChainIndex> block_predecessor(const std::vector<ChainIndex>& block,
                                            const ChainIndex& ix) {
    auto it = std::lower_bound(block.begin(), block.end(), ix);
    if (it == block.end() || *it != ix)
        throw std::invalid_argument("block_predecessor: index not in block " + to_string(ix));
    if (it == block.begin()) return std::nullopt;
    return *(it - 1);
}

std::optional<ChainIndex> block_successor(const std::vector<ChainIndex>& block,
                                          const ChainIndex& ix) {
    auto it = std::upper_bound(block.begin(), block.end(), ix);
    if (it == block.end()) return std::nullopt;
    return *it;
}

Int chart_pair_total(const Chart& chart, const std::map<ChainIndex, Int>& x,
                     const std::map<ChainIndex, Int>& y) {
    Int acc = 0;
    for (const auto& [ix, vx] : x) {
        const int p = chart.position(ix);
        for (const auto& [iy, vy] : y) {
            const int q = chart.position(iy);
            acc += vx * vy * chart.surface.lambda(std::min(p, q)) *
                   chart.surface.mu(std::max(p, q));
        }
    }
    return acc;
}

}  // namespace

SummaryStats stats(const SltModel& model, const DivisorVector& dv) {
    SummaryStats s;
    for (const auto& [ix, v] : dv.odd_part) {
        const WeightEntry& w = model.weight(ix);
        s.sigma_o += v * w.lam;
        s.sigma_bar += v * w.lam_bar;
    }
    for (const auto& [ix, v] : dv.even_part) {
        const WeightEntry& w = model.weight(ix);
        s.tau_e += v * w.mu;
        s.tau_bar += v * w.mu_bar;
    }
    return s;
}

Int form_O(const SltModel& model, const std::map<ChainIndex, Int>& a,
           const std::map<ChainIndex, Int>& b) {
    Int acc = 0;
    for (const auto& [ia, va] : a)
        for (const auto& [ib, vb] : b) {
            const WeightEntry& wa = model.weight(ia);
            const WeightEntry& wb = model.weight(ib);
            acc += va * vb * (ia < ib ? wa.lam * wb.lam_bar : wa.lam_bar * wb.lam);
        }
    return acc;
}

Int form_E(const SltModel& model, const std::map<ChainIndex, Int>& a,
           const std::map<ChainIndex, Int>& b) {
    Int acc = 0;
    for (const auto& [ia, va] : a)
        for (const auto& [ib, vb] : b) {
            const WeightEntry& wa = model.weight(ia);
            const WeightEntry& wb = model.weight(ib);
            acc += va * vb * (ia < ib ? wa.mu * wb.mu_bar : wa.mu_bar * wb.mu);
        }
    return acc;
}

Rat pair_closed_form(const SltModel& model, const DivisorVector& x, const DivisorVector& y) {
    validate_parts(model, x);
    validate_parts(model, y);
    const SummaryStats sx = stats(model, x);
    const SummaryStats sy = stats(model, y);
    const Int e = form_E(model, x.even_part, y.even_part);
    const Int o = form_O(model, x.odd_part, y.odd_part);
    const Int order = model.group_order();
    Int scaled;
    if (model.is_normal()) {
        const Int dma = Int(model.d()) * model.m() * model.a();
        scaled = (dma - 1) * sx.sigma_o * sy.sigma_o + sx.sigma_o * sy.tau_e +
                 sx.tau_e * sy.sigma_o - (dma + 1) * sx.tau_e * sy.tau_e + order * (e - o);
    } else {
        scaled = model.a() * (sx.sigma_o * sy.sigma_o - sx.tau_e * sy.tau_e) + order * (e - o);
    }
    Rat v(scaled, order);
    v.canonicalize();
    return v;
}

Rat toric_pair_oracle(const SltModel& model, const std::map<ChainIndex, Int>& x,
                      const std::map<ChainIndex, Int>& y) {
    if (model.is_normal()) {
        Rat v(chart_pair_total(model.chart_main(), x, y), model.group_order());
        v.canonicalize();
        return v;
    }
    auto split = [&](const std::map<ChainIndex, Int>& t) {
        std::pair<std::map<ChainIndex, Int>, std::map<ChainIndex, Int>> parts;
        for (const auto& [ix, v] : t) (ix.i % 2 == 1 ? parts.first : parts.second)[ix] = v;
        return parts;
    };
    auto [xo, xe] = split(x);
    auto [yo, ye] = split(y);
    Int acc = chart_pair_total(model.chart_main(), xo, yo) +
              chart_pair_total(model.chart_second(), xe, ye);
    Rat v(acc, model.group_order());
    v.canonicalize();
    return v;
}

DivisorVector phi(const SltModel& model, int i, long j) {
    const int k = model.k();
    if (i < 1 || i > k || j < 1 || j > model.q(i))
        throw std::invalid_argument("phi: requires 1 <= i <= k, 1 <= j <= q_i");
    DivisorVector dv;
    if (i % 2 == 1) {
        dv.add_odd({i, 1}, -1);
        dv.add_odd({i, static_cast<int>(j)}, 1);
        dv.add_even(model.e_slot(i + 1, 1), j - 1);
    } else {
        dv.add_even(model.e_slot(i, 1), -1);
        dv.add_even(model.e_slot(i, j), 1);
        dv.add_odd({i + 1, 1}, j - 1);
    }
    return dv;
}

DivisorVector theta(const SltModel& model, int i, long j) {
    const int k = model.k();
    if (i < 1 || i > k - 1 || j < 1 || j > model.q(i))
        throw std::invalid_argument("theta: requires 1 <= i <= k-1, 1 <= j <= q_i");
    DivisorVector dv;
    const long jj = model.q(i) - j + 1;
    if (i % 2 == 1) {
        dv.add_odd({i, static_cast<int>(jj)}, -1);
        dv.add_odd({i + 2, 1}, 1);
        dv.add_even(model.e_slot(i + 1, 1), j);
    } else {
        dv.add_even(model.e_slot(i, jj), -1);
        dv.add_even(model.e_slot(i + 2, 1), 1);
        dv.add_odd({i + 1, 1}, j);
    }
    return dv;
}

DivisorVector psi(const SltModel& model, const ChainIndex& iota, const ChainIndex& eta) {
    const int k = model.k();
    const int i2 = eta.i;
    if (i2 == k + 1 || (iota.i % 2) != (i2 % 2) || !(iota <= ChainIndex{i2, 1}))
        throw std::invalid_argument("psi: inadmissible index pair");
    DivisorVector dv;
    if (iota.i % 2 == 1) {
        if (auto prev = block_predecessor(model.odd_indices(), iota)) dv.add_odd(*prev, -1);
        dv.add_odd(iota, 1);
        for (int i = 3; i <= k + 1; i += 2) {
            const ChainIndex block_head{i, 1};
            if (iota <= block_head && block_head <= eta) dv.add_odd(block_head, model.q(i - 1));
        }
        dv.add_odd({i2, 1}, -1);
        dv.add_odd(eta, 1);
        dv.add_even(model.e_slot(i2 + 1, 1), eta.j);
    } else {
        if (auto prev = block_predecessor(model.even_bar_indices(), iota)) dv.add_even(*prev, -1);
        dv.add_even(iota, 1);
        for (int i = 2; i <= k; i += 2) {
            const ChainIndex block_head{i, 1};
            if (iota <= block_head && block_head <= eta)
                dv.add_even(model.e_slot(i, 1), model.q(i - 1));
        }
        dv.add_even(model.e_slot(i2, 1), -1);
        dv.add_even(model.e_slot(i2, eta.j), 1);
        dv.add_odd({i2 + 1, 1}, eta.j);
    }
    return dv;
}

Rat nu_squared(const SltModel& model, const Int& n) {
    const DivisorVector v = nu(model, n);
    return pair_closed_form(model, v, v);
}

namespace {

// i(n) and the split point of the two bound ranges
int low_range_index(const SltModel& model, const Int& n) {
    int best = -1;
    for (int i = 0; i <= model.k() - 1; ++i)
        if (model.sigma(i) <= n) best = i;
    return best;
}

int high_range_index(const SltModel& model, const Int& n) {
    for (int i = 0; i <= model.k() - 1; ++i)
        if (model.m() - n <= model.sigma(i)) return i;
    throw internal_error("high_range_index: no admissible index");
}

}  // namespace

NuBoundsReport nu_squared_bounds(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("nu_squared_bounds: requires 1 <= n <= m-1");
    const int k = model.k();
    NuBoundsReport rep;
    rep.nu_sq = nu_squared(model, n);
    rep.low_range = n < model.m() - model.sigma(k - 1);
    if (rep.low_range) {
        rep.i_n = low_range_index(model, n);
        rep.bound = Rat(n, model.sigma(rep.i_n));
        rep.bound.canonicalize();
        rep.corrected_holds = rep.nu_sq >= rep.bound;
        rep.printed_holds = rep.nu_sq <= rep.bound;
    } else {
        rep.i_n = high_range_index(model, n);
        const Int mn = model.m() - n;
        rep.j_n = to_long(cdiv(mn, model.sigma(rep.i_n - 1)) - 1, "j(n)");
        Int sum = 0;
        for (int h = std::max(rep.i_n, 1); h <= k; ++h) sum += model.q(h);
        rep.bound = Rat(sum - rep.j_n);
        rep.corrected_holds = rep.nu_sq >= rep.bound;
        rep.printed_holds = rep.corrected_holds;
    }
    return rep;
}

CrossTermReport cross_term_check(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("cross_term_check: requires 1 <= n <= m-1");
    const int k = model.k();
    CrossTermReport rep;
    rep.expected_cross = 0;
    const DivisorVector vn = nu(model, n);

    if (n < model.m() - model.sigma(k - 1)) {
        const int i = low_range_index(model, n);
        if (i <= 0) {
            rep.step = "base";
            rep.applicable = true;
            rep.identity_ok = rep.support_ok = rep.cross_ok = true;
            rep.cross_value = Rat(0);
            rep.square_ok = nu_squared(model, n) == Rat(n);
            return rep;
        }
        const Int jq = n / model.sigma(i);
        const long j = to_long(jq, "recursion digit");
        const Int nprime = n - jq * model.sigma(i);
        DivisorVector elt, base;
        if (nprime == 0) {
            rep.step = "psi";
            const ChainIndex start = (i % 2 == 1) ? ChainIndex{2, 1} : ChainIndex{1, 1};
            elt = psi(model, start, {i + 1, static_cast<int>(j)});
            rep.applicable = true;
            rep.identity_ok = vn == elt;
            rep.support_ok = true;
            rep.cross_value = Rat(0);
            rep.cross_ok = true;
            rep.square_ok =
                nu_squared(model, n) == pair_closed_form(model, elt, elt);
            return rep;
        }
        base = nu(model, nprime);
        if (nprime < model.sigma(i - 1)) {
            rep.step = "psi";
            std::optional<ChainIndex> eta;
            if (i % 2 == 1) {
                const auto& blk = model.even_bar_indices();
                eta = base.even_part.empty()
                          ? std::optional<ChainIndex>(blk.front())
                          : block_successor(blk, base.even_part.rbegin()->first);
            } else {
                const auto& blk = model.odd_indices();
                eta = base.odd_part.empty()
                          ? std::optional<ChainIndex>(blk.front())
                          : block_successor(blk, base.odd_part.rbegin()->first);
            }
            if (!eta) {
                rep.applicable = false;
                return rep;
            }
            elt = psi(model, *eta, {i + 1, static_cast<int>(j)});
        } else {
            rep.step = "phi";
            elt = phi(model, i + 1, j + 1);
        }
        rep.applicable = true;
        rep.identity_ok = vn == base + elt;
        rep.support_ok = support_below(base.odd_part, elt.odd_part) &&
                         support_below(base.even_part, elt.even_part);
        rep.cross_value = pair_closed_form(model, base, elt);
        rep.cross_ok = rep.cross_value == 0;
        rep.square_ok = nu_squared(model, n) ==
                        nu_squared(model, nprime) + pair_closed_form(model, elt, elt);
        return rep;
    }

    // high range: nu(n) = nu(n + j sigma(i-1)) - theta(i, j)
    const int i = high_range_index(model, n);
    if (i == 0) {
        rep.step = "base";
        rep.applicable = true;
        rep.identity_ok = rep.support_ok = rep.cross_ok = true;
        rep.cross_value = Rat(0);
        Int qsum = 0;
        for (int h = 1; h <= k; ++h) qsum += model.q(h);
        rep.square_ok = nu_squared(model, n) == Rat(qsum);
        return rep;
    }
    rep.step = "theta";
    const Int mn = model.m() - n;
    const long j = to_long(cdiv(mn, model.sigma(i - 1)) - 1, "j(n)");
    if (j < 1 || j > model.q(i)) {
        rep.applicable = false;
        return rep;
    }
    const Int nprime = n + Int(j) * model.sigma(i - 1);
    if (nprime > model.m() - 1) {
        rep.applicable = false;
        return rep;
    }
    const DivisorVector base = nu(model, nprime);
    const DivisorVector elt = theta(model, i, j);
    rep.applicable = true;
    rep.identity_ok = vn == base - elt;
    rep.support_ok = true;
    rep.expected_cross = j;
    rep.cross_value = pair_closed_form(model, base, elt);
    rep.cross_ok = rep.cross_value == Rat(Int(j));
    rep.square_ok = nu_squared(model, n) ==
                    nu_squared(model, nprime) - Rat(2 * Int(j)) +
                        pair_closed_form(model, elt, elt);
    return rep;
}

}  // namespace slt
