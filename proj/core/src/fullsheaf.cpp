#include "slt/fullsheaf.hpp"

#include <algorithm>
#include <queue>

namespace slt {

namespace {

struct ResidueGraph {
    long nodes = 0;
    std::vector<ChainIndex> items;
    std::vector<long> step;              // residue advance per unit of each item
    std::vector<std::vector<Int>> cost;  // cost[f][item]: functional f
};

// Shortest-path distances from residue 0 under cost functional f, with
// predecessor edges for reconstruction.
struct DistTable {
    std::vector<Int> dist;
    std::vector<long> pred_node;
    std::vector<int> pred_item;
};

template <typename C>
DistTable dijkstra_typed(const ResidueGraph& g, const std::vector<C>& cost) {
    std::vector<C> dist(g.nodes, C(-1));
    DistTable t;
    t.pred_node.assign(g.nodes, -1);
    t.pred_item.assign(g.nodes, -1);
    using Entry = std::pair<C, long>;
    auto cmp = [](const Entry& a, const Entry& b) { return a.first > b.first; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> pq(cmp);
    dist[0] = C(0);
    pq.push({C(0), 0});
    while (!pq.empty()) {
        auto [dv, u] = pq.top();
        pq.pop();
        if (dist[u] != dv) continue;
        for (size_t e = 0; e < g.items.size(); ++e) {
            const long v = (u + g.step[e]) % g.nodes;
            C nd = dv + cost[e];
            if (dist[v] < C(0) || nd < dist[v]) {
                dist[v] = nd;
                t.pred_node[v] = u;
                t.pred_item[v] = static_cast<int>(e);
                pq.push({std::move(nd), v});
            }
        }
    }
    t.dist.reserve(g.nodes);
    for (const C& d : dist) t.dist.emplace_back(d);
    return t;
}

DistTable dijkstra(const ResidueGraph& g, int f) {
    // a simple path visits at most `nodes` edges, so plain machine words are
    // exact whenever nodes * max_cost stays below 2^62
    Int worst = 0;
    for (const Int& c : g.cost[f])
        if (c > worst) worst = c;
    if (Int(g.nodes) * worst < (Int(1) << 62)) {
        std::vector<long> cost;
        cost.reserve(g.cost[f].size());
        for (const Int& c : g.cost[f]) cost.push_back(to_long(c, "edge cost"));
        return dijkstra_typed(g, cost);
    }
    return dijkstra_typed(g, g.cost[f]);
}

// Componentwise-minimal effective vector with the prescribed target residue.
// cost[0..F-1] are the per-curve functionals; the candidate is found by
// minimizing their sum and must then achieve every per-functional minimum.
std::map<ChainIndex, Int> dominated_minimum(const ResidueGraph& g, long target,
                                            const std::string& what) {
    const int F = static_cast<int>(g.cost.size());
    std::vector<Int> per_min(F);
    for (int f = 0; f < F; ++f) {
        DistTable t = dijkstra(g, f);
        if (t.dist[target] < 0) throw oracle_failure(what + ": target residue unreachable");
        per_min[f] = t.dist[target];
    }

    ResidueGraph sum = g;
    sum.cost.assign(1, std::vector<Int>(g.items.size(), 0));
    for (size_t e = 0; e < g.items.size(); ++e)
        for (int f = 0; f < F; ++f) sum.cost[0][e] += g.cost[f][e];
    DistTable t = dijkstra(sum, 0);
    if (t.dist[target] < 0) throw oracle_failure(what + ": target residue unreachable");

    std::map<ChainIndex, Int> cand;
    for (long v = target; v != 0;) {
        if (t.pred_item[v] < 0) throw internal_error(what + ": broken predecessor chain");
        const int e = t.pred_item[v];
        cand[g.items[e]] += 1;
        v = t.pred_node[v];
    }
    for (int f = 0; f < F; ++f) {
        Int achieved = 0;
        for (const auto& [ix, mult] : cand) {
            const auto it = std::find(g.items.begin(), g.items.end(), ix);
            achieved += mult * g.cost[f][it - g.items.begin()];
        }
        if (achieved != per_min[f])
            throw oracle_failure(what + ": no componentwise dominated minimum exists");
    }
    return cand;
}

long node_count(const Int& order, const std::string& what) {
    if (order > (Int(1) << 24))
        throw std::invalid_argument(what + ": group order too large for the oracle");
    return to_long(order, "group order");
}

// Residue graph of a single chart: items are the chart's indices, a unit of
// item iota advances the class by cls(iota) and costs order*alpha(pos, eta)
// = lambda(min pos) * mu(max pos) toward each curve eta of the chart.
ResidueGraph chart_graph(const Chart& chart, const std::vector<ChainIndex>& items,
                         const Int& order, const std::map<ChainIndex, Int>& cls) {
    ResidueGraph g;
    g.nodes = node_count(order, "oracle");
    g.items = items;
    for (const ChainIndex& ix : items) g.step.push_back(to_long(mod(cls.at(ix), order), "step"));
    const int curves = chart.chain.curve_count();
    g.cost.assign(curves, {});
    for (int p = 1; p <= curves; ++p) {
        auto& row = g.cost[p - 1];
        row.reserve(items.size());
        for (const ChainIndex& ix : items) {
            const int q = chart.position(ix);
            row.push_back(chart.surface.lambda(std::min(p, q)) * chart.surface.mu(std::max(p, q)));
        }
    }
    return g;
}

std::map<ChainIndex, Int> chart_minimum(const SltModel& model, const Chart& chart,
                                        const std::vector<ChainIndex>& items, const Int& target_cls,
                                        const std::map<ChainIndex, Int>& cls,
                                        const std::string& what) {
    ResidueGraph g = chart_graph(chart, items, model.group_order(), cls);
    const long target = to_long(mod(target_cls, model.group_order()), "target");
    if (target == 0) return {};
    return dominated_minimum(g, target, what);
}

}  // namespace

DivisorVector nu(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1) throw std::invalid_argument("nu: requires 1 <= n <= m-1");
    const int k = model.k();
    const LambdaSeq L = lambda_expand(model, n);
    const MuSeq M = mu_expand(model, n);

    DivisorVector dv;
    if (L.digits[0] >= 1) dv.add_odd({1, static_cast<int>(L.digits[0])}, 1);
    for (int i = 3; i <= k - 1; i += 2) {
        dv.add_odd({i, 1}, L.digits[i - 2]);
        if (L.digits[i - 1] >= 1) dv.add_odd({i, static_cast<int>(L.digits[i - 1])}, 1);
    }
    dv.add_odd({k + 1, 1}, L.digits[k - 1]);
    for (int i = 2; i <= k; i += 2) {
        dv.add_even(model.e_slot(i, 1), M.digits[i - 2]);
        if (M.digits[i - 1] >= 2) dv.add_even(model.e_slot(i, M.digits[i - 1]), 1);
    }
    validate_parts(model, dv);
    return dv;
}

std::map<ChainIndex, Int> fullsheaf_degrees(const SltModel& model, const Int& n) {
    return nu(model, n).total();
}

std::map<ChainIndex, Int> fullsheaf_oracle(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("fullsheaf_oracle: requires 1 <= n <= m-1");
    if (model.is_normal()) {
        // class of a unit of iota is lambda_iota: (dmb-1)mu == lambda mod dm^2
        // makes the two sides of the congruence agree slotwise
        std::map<ChainIndex, Int> cls;
        for (const ChainIndex& ix : model.index_lex()) cls[ix] = model.lambda(ix);
        const Int target = Int(model.d()) * model.m() * model.b() * n;
        return chart_minimum(model, model.chart_main(), model.index_lex(), target, cls,
                             "fullsheaf_oracle");
    }
    std::map<ChainIndex, Int> out = nonnormal_oracle(model, n, ChartSide::O);
    for (auto& [ix, v] : nonnormal_oracle(model, n, ChartSide::E)) out[ix] = v;
    return out;
}

std::map<ChainIndex, Int> nonnormal_degrees(const SltModel& model, const Int& n, ChartSide side) {
    if (model.is_normal()) throw std::invalid_argument("nonnormal_degrees: non-normal models only");
    DivisorVector dv = nu(model, n);
    return side == ChartSide::O ? dv.odd_part : dv.even_part;
}

std::map<ChainIndex, Int> nonnormal_oracle(const SltModel& model, const Int& n, ChartSide side) {
    if (model.is_normal()) throw std::invalid_argument("nonnormal_oracle: non-normal models only");
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("nonnormal_oracle: requires 1 <= n <= m-1");
    std::map<ChainIndex, Int> cls;
    if (side == ChartSide::O) {
        for (const ChainIndex& ix : model.odd_indices()) cls[ix] = model.lambda(ix);
        return chart_minimum(model, model.chart_main(), model.odd_indices(), n, cls,
                             "nonnormal_oracle(O)");
    }
    for (const ChainIndex& ix : model.even_indices()) cls[ix] = model.mu(ix);
    return chart_minimum(model, model.chart_second(), model.even_indices(), n, cls,
                         "nonnormal_oracle(E)");
}

std::map<ChainIndex, Rat> alpha_vector(const SltModel& model,
                                       const std::map<ChainIndex, Int>& total) {
    std::map<ChainIndex, Rat> out;
    auto chart_rows = [&](const Chart& chart, const std::vector<ChainIndex>& etas) {
        for (const ChainIndex& eta : etas) {
            const int p = chart.position(eta);
            Int acc = 0;
            for (const auto& [ix, mult] : total) {
                if (&model.chart_of(ix) != &chart) continue;
                const int q = chart.position(ix);
                acc += mult * chart.surface.lambda(std::min(p, q)) *
                       chart.surface.mu(std::max(p, q));
            }
            Rat v(acc, chart.surface.r);
            v.canonicalize();
            out[eta] = v;
        }
    };
    if (model.is_normal()) {
        chart_rows(model.chart_main(), model.index_lex());
    } else {
        chart_rows(model.chart_main(), model.odd_indices());
        chart_rows(model.chart_second(), model.even_indices());
    }
    return out;
}

std::vector<TPair> t_min_bruteforce(const SltModel& model, const Int& n) {
    if (!model.is_normal()) throw std::invalid_argument("t_min_bruteforce: normal models only");
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("t_min_bruteforce: requires 1 <= n <= m-1");
    const Int order = model.group_order();
    const Int w = Int(model.d()) * model.m() * model.b();  // dmb
    std::vector<TPair> best;
    Int v = -1;
    for (Int t = 0; t <= 2 * n; ++t) {
        Int s = mod(w * n - (w - 1) * t, order);
        Int tot = s + t;
        if (v < 0 || tot < v) {
            v = tot;
            best.clear();
        }
        if (tot == v) best.push_back({s, t});
    }
    return best;
}

std::vector<TPair> t_min_closed_form(const SltModel& model, const Int& n) {
    if (!model.is_normal()) throw std::invalid_argument("t_min_closed_form: normal models only");
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("t_min_closed_form: requires 1 <= n <= m-1");
    if (model.d() >= 2) return {{n, n}};
    // d = 1: threshold at m - (P+Q) of the canonical expansion's next-to-last
    // convergent
    const int k = model.k();
    const Int sig = model.odd_canonical() ? model.sigma(k - 2) : model.sigma(k - 1);
    if (n < model.m() - sig) return {{n, n}};
    if (model.odd_canonical()) return {{n - model.m() + sig, n + sig}};
    return {{n + sig, n - model.m() + sig}};
}

TPair stat_pair(const SltModel& model, const std::map<ChainIndex, Int>& total) {
    if (!model.is_normal()) throw std::invalid_argument("stat_pair: normal models only");
    TPair p{0, 0};
    for (const auto& [ix, v] : total) {
        if (model.in_stat_odd(ix))
            p.s += v * model.lambda(ix);
        else
            p.t += v * model.mu(ix);
    }
    return p;
}

Int member_class_of_nk(const SltModel& model, const Int& n) {
    if (n < 1) throw std::invalid_argument("member_class_of_nk: requires n >= 1");
    return mod(-n, model.m());
}

std::vector<GeneralMember> general_member_report(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("general_member_report: requires 1 <= n <= m-1");
    const int k = model.k();
    const LambdaSeq L = lambda_expand(model, n);
    const MuSeq M = mu_expand(model, n);
    std::vector<GeneralMember> out;
    auto push = [&](const ChainIndex& ix, long count, bool pencil) {
        if (count <= 0) return;
        const WeightEntry& w = model.weight(ix);
        out.push_back({ix, Int(count), pencil, w.lam, w.mu});
    };
    push({1, static_cast<int>(L.digits[0])}, L.digits[0] >= 1 ? 1 : 0, false);
    for (int i = 3; i <= k - 1; i += 2) {
        push({i, 1}, L.digits[i - 2], true);
        if (L.digits[i - 1] >= 1) push({i, static_cast<int>(L.digits[i - 1])}, 1, false);
    }
    push({k + 1, 1}, L.digits[k - 1], true);
    for (int i = 2; i <= k; i += 2) {
        push(model.e_slot(i, 1), M.digits[i - 2], true);
        if (M.digits[i - 1] >= 2) push(model.e_slot(i, M.digits[i - 1]), 1, false);
    }

    // the listed curves must add up to the degree vector
    std::map<ChainIndex, Int> sum;
    for (const GeneralMember& g : out) sum[g.index] += g.count;
    if (sum != fullsheaf_degrees(model, n))
        throw internal_error("general_member_report: curves do not sum to nu(n)");
    return out;
}

}  // namespace slt
