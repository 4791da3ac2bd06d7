// Command-line front end: builds singularity models and runs the resolution,
// full-sheaf, pairing, expansion and index-bound computations, plus the
// verification sweeps.  All JSON output is deterministic: keys sorted,
// integers as decimal strings, rationals as "p/q".

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "slt/verify.hpp"

namespace {

using slt::ChainIndex;
using slt::Int;
using slt::json;
using slt::SltModel;

struct ModelArgs {
    std::vector<long> classt;
    std::vector<long> nonnormal;

    void attach(CLI::App* cmd) {
        auto* ct = cmd->add_option("--classt", classt,
                                   "class T model X_{a,d,m}: three integers a d m")
                       ->expected(3);
        auto* nn = cmd->add_option("--nonnormal", nonnormal,
                                   "non-normal model X_{a,m}: two integers a m")
                       ->expected(2);
        ct->excludes(nn);
        nn->excludes(ct);
    }
    SltModel build() const {
        if (!classt.empty()) return SltModel::build_class_t(classt[0], classt[1], classt[2]);
        if (!nonnormal.empty()) return SltModel::build_nonnormal(nonnormal[0], nonnormal[1]);
        throw std::invalid_argument("one of --classt or --nonnormal is required");
    }
};

json alpha_array(const SltModel& model, const std::map<ChainIndex, Int>& totals) {
    const auto alpha = slt::alpha_vector(model, totals);
    json arr = json::array();
    auto emit_chart = [&](const slt::Chart& chart) {
        for (const ChainIndex& ix : chart.order) arr.push_back(slt::str(alpha.at(ix)));
    };
    emit_chart(model.chart_main());
    if (!model.is_normal()) emit_chart(model.chart_second());
    return arr;
}

void print_payload(const json& j, bool as_json) {
    if (as_json) {
        std::cout << j.dump() << "\n";
        return;
    }
    std::cout << j.dump(2) << "\n";
}

int cmd_resolve(const ModelArgs& margs, bool as_json) {
    const SltModel model = margs.build();
    const json j = slt::to_json(model);
    if (as_json) {
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << (model.is_normal() ? "class T model X_{a,d,m}" : "non-normal model X_{a,m}")
              << "  a=" << model.a();
    if (model.is_normal()) std::cout << " d=" << model.d();
    std::cout << " m=" << model.m() << "\n";
    std::cout << "group order: " << slt::str(model.group_order())
              << "   gorenstein index: " << slt::str(model.gorenstein_index()) << "\n";
    std::cout << "q: ";
    for (long t : model.q()) std::cout << t << " ";
    std::cout << "\n";
    auto chart_lines = [&](const char* name, const slt::Chart& chart) {
        std::cout << name << " (" << slt::str(chart.surface.r) << "," << slt::str(chart.surface.s)
                  << ")  self-intersections:";
        for (const Int& e : chart.chain.self_int) std::cout << " " << slt::str(e);
        std::cout << "\n  chain order:";
        for (const ChainIndex& ix : chart.order) std::cout << " " << slt::to_string(ix);
        std::cout << "\n";
    };
    if (model.is_normal()) {
        chart_lines("chart", model.chart_main());
    } else {
        chart_lines("chart O", model.chart_main());
        chart_lines("chart E", model.chart_second());
    }
    std::cout << "weights (index: lambda mu):\n";
    for (const ChainIndex& ix : model.index_lex()) {
        const slt::WeightEntry& w = model.weight(ix);
        std::cout << "  " << slt::to_string(ix) << ": " << slt::str(w.lam) << " "
                  << slt::str(w.mu) << "\n";
    }
    return 0;
}

int cmd_fullsheaf(const ModelArgs& margs, long n, bool as_json) {
    const SltModel model = margs.build();
    const Int nn(n);
    const auto deg = slt::fullsheaf_degrees(model, nn);
    const auto orc = slt::fullsheaf_oracle(model, nn);
    const bool agree = deg == orc;
    json j;
    j["n"] = std::to_string(n);
    j["nu"] = slt::totals_to_json(deg);
    j["alpha"] = alpha_array(model, deg);
    j["oracle_agrees"] = agree;
    if (model.is_normal()) {
        json tm = json::array();
        for (const slt::TPair& p : slt::t_min_bruteforce(model, nn))
            tm.push_back({slt::str(p.s), slt::str(p.t)});
        j["t_min"] = tm;
    }
    print_payload(j, as_json);
    return agree ? 0 : 3;
}

int cmd_member(const ModelArgs& margs, long n, bool as_json) {
    const SltModel model = margs.build();
    const auto curves = slt::general_member_report(model, Int(n));
    json j;
    j["n"] = std::to_string(n);
    json arr = json::array();
    for (const slt::GeneralMember& g : curves) {
        json e;
        e["index"] = slt::to_string(g.index);
        e["count"] = slt::str(g.count);
        e["pencil"] = g.pencil;
        e["lambda"] = slt::str(g.lam);
        e["mu"] = slt::str(g.mu);
        arr.push_back(e);
    }
    j["curves"] = arr;
    j["nu"] = slt::totals_to_json(slt::fullsheaf_degrees(model, Int(n)));
    print_payload(j, as_json);
    return 0;
}

int cmd_pair(const ModelArgs& margs, long n, bool as_json) {
    const SltModel model = margs.build();
    const slt::DivisorVector v = slt::nu(model, Int(n));
    const slt::Rat closed = slt::pair_closed_form(model, v, v);
    const slt::Rat oracle = slt::toric_pair_oracle(model, v.total(), v.total());
    json j;
    j["n"] = std::to_string(n);
    j["closed_form"] = slt::str(closed);
    j["oracle"] = slt::str(oracle);
    j["agree"] = closed == oracle;
    print_payload(j, as_json);
    return closed == oracle ? 0 : 3;
}

int cmd_expand(const ModelArgs& margs, long n, const std::string& kind, bool as_json) {
    const SltModel model = margs.build();
    json j;
    j["n"] = std::to_string(n);
    j["kind"] = kind;
    std::vector<long> digits;
    Int valuation;
    if (kind == "lambda") {
        const slt::LambdaSeq s = slt::lambda_expand(model, Int(n));
        digits = s.digits;
        valuation = slt::lambda_valuation(model, s);
    } else if (kind == "mu") {
        const slt::MuSeq s = slt::mu_expand(model, Int(n));
        digits = s.digits;
        valuation = slt::mu_valuation(model, s);
    } else if (kind == "tau") {
        const slt::TauSeq s = slt::tau_expand(model, Int(n));
        digits = s.digits;
        valuation = slt::tau_valuation(model, s);
    } else {
        throw std::invalid_argument("--kind must be lambda, mu or tau");
    }
    json arr = json::array();
    for (long d : digits) arr.push_back(std::to_string(d));
    j["digits"] = arr;
    j["valuation"] = slt::str(valuation);
    print_payload(j, as_json);
    return 0;
}

int cmd_bound(const ModelArgs& margs, long n, bool as_json) {
    const SltModel model = margs.build();
    const slt::IndexBoundReport rep = slt::verify_index_bound(model, Int(n));
    json j;
    j["index"] = slt::str(rep.index);
    j["n"] = std::to_string(n);
    j["DDprime"] = slt::str(rep.dd_prime);
    j["B"] = slt::str(rep.bound);
    j["ok"] = rep.ok;
    print_payload(j, as_json);
    return rep.ok ? 0 : 3;
}

int cmd_verify(const slt::VerifyOptions& opt, const std::string& ledger_path, bool as_json) {
    const slt::VerifyResult res = slt::run_verify(opt);
    if (!ledger_path.empty()) {
        std::ofstream out(ledger_path);
        if (!out) throw std::invalid_argument("cannot open ledger path " + ledger_path);
        slt::write_ledger(out, res);
    }
    json j;
    j["checks"] = res.checks;
    j["errata"] = res.errata;
    j["violations"] = res.violations;
    j["ok"] = res.ok();
    if (as_json) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "checks run:  " << res.checks << "\n"
                  << "errata:      " << res.errata << "\n"
                  << "violations:  " << res.violations << "\n"
                  << (res.ok() ? "OK" : "FAILED") << "\n";
        if (!res.ok())
            for (const slt::Finding& f : res.findings)
                if (f.verdict == "violation")
                    std::cout << "  violation " << f.check << " " << f.instance << ": expected "
                              << f.expected << ", got " << f.got << "\n";
    }
    return res.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on two-dimensional smoothable semi-log-terminal "
                 "singularities"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    ModelArgs margs;
    long n = 1;
    std::string kind = "lambda";

    auto* resolve = app.add_subcommand("resolve", "resolution chain, weights and index");
    margs.attach(resolve);

    auto* fullsheaf = app.add_subcommand("fullsheaf", "degree vector of the full sheaf F(-nK)");
    margs.attach(fullsheaf);
    fullsheaf->add_option("--n", n, "twist")->required();

    auto* member = app.add_subcommand("member", "general member of |-nK| as a curve list");
    margs.attach(member);
    member->add_option("--n", n, "twist")->required();

    auto* pair = app.add_subcommand("pair", "self-intersection of nu(n), both routes");
    margs.attach(pair);
    pair->add_option("--n", n, "twist")->required();

    auto* expand = app.add_subcommand("expand", "lambda/mu/tau expansion of n");
    margs.attach(expand);
    expand->add_option("--n", n, "value to expand")->required();
    expand->add_option("--kind", kind, "lambda, mu or tau")->required();

    auto* bound = app.add_subcommand("bound", "Gorenstein index bound at n");
    margs.attach(bound);
    bound->add_option("--n", n, "twist")->required();

    slt::VerifyOptions vopt;
    std::string ledger_path;
    auto* verify = app.add_subcommand("verify", "verification sweeps and discrepancy ledger");
    verify->add_option("--max-m", vopt.max_m, "largest m for class T models")
        ->capture_default_str();
    verify->add_option("--max-d", vopt.max_d, "largest d for class T models")
        ->capture_default_str();
    verify->add_option("--max-m-nonnormal", vopt.max_m_nonnormal,
                       "largest m for non-normal models")
        ->capture_default_str();
    verify->add_option("--seed", vopt.seed, "seed for the random pairing vectors")
        ->capture_default_str();
    verify->add_option("--ledger", ledger_path, "write the JSONL discrepancy ledger here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    const bool as_json = format == "json";
    try {
        if (resolve->parsed()) return cmd_resolve(margs, as_json);
        if (fullsheaf->parsed()) return cmd_fullsheaf(margs, n, as_json);
        if (member->parsed()) return cmd_member(margs, n, as_json);
        if (pair->parsed()) return cmd_pair(margs, n, as_json);
        if (expand->parsed()) return cmd_expand(margs, n, kind, as_json);
        if (bound->parsed()) return cmd_bound(margs, n, as_json);
        if (verify->parsed()) return cmd_verify(vopt, ledger_path, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const slt::oracle_failure& e) {
        std::cerr << "verification finding: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
