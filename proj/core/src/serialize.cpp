#include "slt/serialize.hpp"

namespace slt {

json to_json(const Int& v) { return str(v); }
json to_json(const Rat& v) { return str(v); }
json to_json(const ChainIndex& ix) { return to_string(ix); }

namespace {

json index_list(const std::vector<ChainIndex>& v) {
    json arr = json::array();
    for (const ChainIndex& ix : v) arr.push_back(to_json(ix));
    return arr;
}

json chart_to_json(const Chart& chart) {
    json j;
    j["r"] = to_json(chart.surface.r);
    j["s"] = to_json(chart.surface.s);
    json cf = json::array();
    for (const Int& q : chart.surface.cf.terms) cf.push_back(to_json(q));
    j["minus_cf"] = cf;
    json rays = json::array();
    for (const Ray& v : chart.chain.rays) rays.push_back({to_json(v[0]), to_json(v[1])});
    j["rays"] = rays;
    json si = json::array();
    for (const Int& e : chart.chain.self_int) si.push_back(to_json(e));
    j["self_intersections"] = si;
    j["chain_order"] = index_list(chart.order);
    return j;
}

}  // namespace

json to_json(const SltModel& model) {
    json j;
    j["kind"] = model.is_normal() ? "class_t" : "nonnormal";
    j["a"] = std::to_string(model.a());
    j["m"] = std::to_string(model.m());
    j["b"] = std::to_string(model.b());
    if (model.is_normal()) {
        j["d"] = std::to_string(model.d());
    } else {
        j["a_inverse"] = std::to_string(model.a_inverse());
        j["b_inverse"] = std::to_string(model.b_inverse());
        // the double curve is the image of the z3-axis in each chart; its
        // local equation is the coordinate of weight 1
        j["delta"] = {{"chart_o", "z3-axis"}, {"chart_e", "z3-axis"}, {"weight", "1"}};
    }
    j["odd_length_source"] = model.odd_canonical();
    json q = json::array();
    for (long t : model.q()) q.push_back(std::to_string(t));
    j["q"] = q;
    j["group_order"] = to_json(model.group_order());
    j["gorenstein_index"] = to_json(model.gorenstein_index());
    j["index_set_odd"] = index_list(model.odd_indices());
    j["index_set_even"] = index_list(model.even_indices());

    json weights;
    for (const ChainIndex& ix : model.index_lex()) {
        const WeightEntry& w = model.weight(ix);
        json e;
        e["rho"] = to_json(w.rho);
        e["lambda"] = to_json(w.lam);
        e["mu"] = to_json(w.mu);
        if (model.is_normal() || ix.i % 2 == 1) {
            e["lambda_bar"] = to_json(w.lam_bar);
            e["lambda_hat"] = to_json(w.lam_hat);
        }
        if (model.is_normal() || ix.i % 2 == 0) {
            e["mu_bar"] = to_json(w.mu_bar);
            e["mu_hat"] = to_json(w.mu_hat);
        }
        weights[to_string(ix)] = e;
    }
    j["weights"] = weights;

    if (model.is_normal()) {
        j["chart"] = chart_to_json(model.chart_main());
    } else {
        j["chart_o"] = chart_to_json(model.chart_main());
        j["chart_e"] = chart_to_json(model.chart_second());
    }
    return j;
}

json totals_to_json(const std::map<ChainIndex, Int>& totals) {
    json j = json::object();
    for (const auto& [ix, v] : totals) j[to_string(ix)] = to_json(v);
    return j;
}

json alpha_to_json(const std::map<ChainIndex, Rat>& alpha) {
    json j = json::object();
    for (const auto& [ix, v] : alpha) j[to_string(ix)] = to_json(v);
    return j;
}

}  // namespace slt
