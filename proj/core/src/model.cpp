#include "slt/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace slt {

namespace {

constexpr long kMaxChainSlots = 1 << 20;

long checked_ll(const Int& v, const char* what) { return to_long(v, what); }

// Working plus expansion of a/b: canonical when even, otherwise the
// re-expansion [q_1,...,q_k - 1, 1] of the same value with even length.
std::vector<long> working_terms(long a, long b, bool& odd_canonical) {
    PlusCF cf = plus_expand(Fraction(a, b));
    odd_canonical = cf.terms.size() % 2 == 1;
    std::vector<long> q;
    q.reserve(cf.terms.size() + 1);
    for (const Int& t : cf.terms) q.push_back(checked_ll(t, "continued-fraction term"));
    if (odd_canonical) {
        if (q.back() < 2) throw internal_error("working_terms: canonical tail below 2");
        q.back() -= 1;
        q.push_back(1);
    }
    return q;
}

Chart make_chart(const Int& r, const Int& s) {
    Chart c;
    auto [surf, chain] = resolve(r, s);
    c.surface = std::move(surf);
    c.chain = std::move(chain);
    return c;
}

}  // namespace

std::string to_string(const ChainIndex& ix) {
    std::ostringstream os;
    os << "(" << ix.i << "," << ix.j << ")";
    return os.str();
}

int Chart::position(const ChainIndex& ix) const {
    auto it = pos.find(ix);
    if (it == pos.end()) throw std::invalid_argument("Chart::position: unknown index " + to_string(ix));
    return it->second;
}

const WeightEntry& SltModel::weight(const ChainIndex& ix) const {
    auto it = weights_.find(ix);
    if (it == weights_.end())
        throw std::invalid_argument("SltModel::weight: unknown index " + to_string(ix));
    return it->second;
}

ChainIndex SltModel::boundary() const {
    if (!is_normal()) throw std::logic_error("boundary(): only defined for the normal case");
    return {k() + 1, static_cast<int>(d_)};
}

ChainIndex SltModel::e_slot(int i, long j) const {
    if (is_normal() && i == k() && j >= q(k())) {
        if (j > q(k())) throw internal_error("e_slot: even-side index beyond the boundary");
        return boundary();
    }
    ChainIndex ix{i, static_cast<int>(j)};
    if (!contains(ix)) throw internal_error("e_slot: unknown index " + to_string(ix));
    return ix;
}

const Chart& SltModel::chart_second() const {
    if (!second_) throw std::logic_error("chart_second(): normal models have a single chart");
    return *second_;
}

const Chart& SltModel::chart_of(const ChainIndex& ix) const {
    if (is_normal()) return main_;
    return ix.i % 2 == 1 ? main_ : *second_;
}

long SltModel::block_cut() const {
    if (!is_normal()) throw std::logic_error("block_cut(): normal models only");
    return odd_canonical_ ? d_ / 2 : (d_ + 1) / 2;
}

bool SltModel::in_stat_odd(const ChainIndex& ix) const {
    if (ix.i % 2 == 0) return false;
    if (ix.i == k() + 1) return ix.j <= block_cut();
    return true;
}

Int SltModel::gorenstein_index() const {
    if (is_normal()) {
        // r / gcd(r, s+1) with r = dm^2, s = dma - 1
        Int idx = order_ / gcd(order_, Int(d_) * m_ * a_);
        if (idx != m_) throw internal_error("gorenstein_index: expected the index to equal m");
        return idx;
    }
    return Int(m_);
}

void SltModel::finish_common() {
    const int kk = k();
    // plus-Euclid tables of a/b on the working terms
    PlusCF cf;
    for (long t : q_) cf.terms.emplace_back(t);
    euclid_ = euclid_data(cf, Int(a_), Int(b_));

    sigma_.clear();
    sigma_.reserve(kk + 2);
    for (int i = -1; i <= kk; ++i) sigma_.push_back(euclid_.P(i) + euclid_.Q(i));
    if (sigma(kk) != m_) throw internal_error("model: sigma_k != m");

    std::sort(lex_.begin(), lex_.end());
    odd_.clear();
    even_.clear();
    for (const ChainIndex& ix : lex_) (ix.i % 2 == 1 ? odd_ : even_).push_back(ix);
    even_bar_ = even_;
    if (is_normal()) {
        even_bar_.push_back(boundary());
        std::sort(even_bar_.begin(), even_bar_.end());
    }
}

SltModel SltModel::build_class_t(long a, long d, long m) {
    if (m < 2 || d < 1 || a <= 0 || 2 * a <= m || a >= m || std::gcd(a, m) != 1)
        throw std::invalid_argument(
            "build_class_t: requires m >= 2, d >= 1, m/2 < a < m, gcd(a,m) = 1");

    SltModel mod;
    mod.kind_ = Kind::ClassT;
    mod.a_ = a;
    mod.d_ = d;
    mod.m_ = m;
    mod.b_ = m - a;
    mod.order_ = Int(d) * m * m;
    mod.q_ = working_terms(a, m - a, mod.odd_canonical_);

    const int kk = static_cast<int>(mod.q_.size());
    long slots = d;
    for (long t : mod.q_) slots += t;
    if (slots > kMaxChainSlots) throw std::invalid_argument("build_class_t: model too large");

    for (int i = 1; i <= kk + 1; i += 2) {
        const long jmax = (i < kk + 1) ? mod.q_[i - 1] : d;
        for (long j = 1; j <= jmax; ++j) mod.lex_.push_back({i, static_cast<int>(j)});
    }
    for (int i = 2; i <= kk; i += 2) {
        const long jmax = (i < kk) ? mod.q_[i - 1] : mod.q_[i - 1] - 1;
        for (long j = 1; j <= jmax; ++j) mod.lex_.push_back({i, static_cast<int>(j)});
    }
    mod.finish_common();

    const EuclidData& eu = mod.euclid_;
    for (const ChainIndex& ix : mod.lex_) {
        WeightEntry w;
        const int i = ix.i;
        const Int j(ix.j);
        w.rho = eu.r(i - 1) - (j - 1) * eu.r(i);
        const Int base_p = eu.P(i - 2) + (j - 1) * eu.P(i - 1);
        const Int base_q = eu.Q(i - 2) + (j - 1) * eu.Q(i - 1);
        if (i % 2 == 1) {
            w.lam_bar = base_p;
            w.lam_hat = base_q;
            w.mu_bar = -base_p + d * a * w.rho;
            w.mu_hat = -base_q + d * (m - a) * w.rho;
        } else {
            w.lam_bar = -base_p + d * a * w.rho;
            w.lam_hat = -base_q + d * (m - a) * w.rho;
            w.mu_bar = base_p;
            w.mu_hat = base_q;
        }
        w.lam = w.lam_bar + w.lam_hat;
        w.mu = w.mu_bar + w.mu_hat;
        mod.weights_.emplace(ix, std::move(w));
    }

    mod.main_ = make_chart(mod.order_, Int(d) * m * a - 1);
    mod.validate_class_t();
    return mod;
}

void SltModel::validate_class_t() {
    const int curves = main_.chain.curve_count();
    if (static_cast<int>(lex_.size()) != curves)
        throw internal_error("class_t: |I| != number of exceptional curves");

    // place every index on the chain through its ray (lam_hat, lam)
    std::map<std::pair<Int, Int>, int> ray_pos;
    for (int p = 1; p <= curves; ++p)
        ray_pos[{main_.chain.rays[p][0], main_.chain.rays[p][1]}] = p;
    main_.order.assign(curves, ChainIndex{});
    for (const ChainIndex& ix : lex_) {
        const WeightEntry& w = weights_.at(ix);
        auto it = ray_pos.find({w.lam_hat, w.lam});
        if (it == ray_pos.end())
            throw internal_error("class_t: weight-table ray missing from the resolution " +
                                 to_string(ix));
        main_.pos[ix] = it->second;
        main_.order[it->second - 1] = ix;
    }
    if (main_.pos.size() != lex_.size()) throw internal_error("class_t: ray placement not injective");

    const Int s = Int(d_) * m_ * a_ - 1;
    const Int t = Int(d_) * m_ * b_ - 1;
    for (const ChainIndex& ix : lex_) {
        const WeightEntry& w = weights_.at(ix);
        const int p = main_.pos.at(ix);
        if (w.lam != main_.surface.lambda(p) || w.mu != main_.surface.mu(p))
            throw internal_error("class_t: weights disagree with the chain data at " + to_string(ix));
        if (mod(s * w.lam - w.mu, order_) != 0)
            throw internal_error("class_t: semi-invariance fails at " + to_string(ix));
        // (dmb-1) mu == lam mod dm^2; lets the class congruence use lambda only
        if (mod(t * w.mu - w.lam, order_) != 0)
            throw internal_error("class_t: inverse-weight identity fails at " + to_string(ix));
    }
}

SltModel SltModel::build_nonnormal(long a, long m) {
    if (m < 2 || a <= 0 || a >= m || std::gcd(a, m) != 1)
        throw std::invalid_argument("build_nonnormal: requires 0 < a < m, gcd(a,m) = 1");
    if (2 * a < m) a = m - a;  // X_{a,m} and X_{m-a,m} swap the two charts
    if (2 * a == m)
        throw std::invalid_argument("build_nonnormal: a = m-a (only m = 2) is not supported");

    SltModel mod;
    mod.kind_ = Kind::NonNormal;
    mod.a_ = a;
    mod.m_ = m;
    mod.b_ = m - a;
    mod.d_ = 1;
    mod.order_ = m;
    for (long x = 1; x < m; ++x) {
        if (x * a % m == 1) mod.a_inv_ = x;
        if (x * mod.b_ % m == 1) mod.b_inv_ = x;
    }
    mod.q_ = working_terms(a, m - a, mod.odd_canonical_);

    const int kk = static_cast<int>(mod.q_.size());
    for (int i = 1; i <= kk + 1; i += 2) {
        const long jmax = (i < kk) ? mod.q_[i - 1] : (i == kk + 1 ? 1 : mod.q_[i - 1]);
        for (long j = 1; j <= jmax; ++j) mod.lex_.push_back({i, static_cast<int>(j)});
    }
    for (int i = 2; i <= kk; i += 2)
        for (long j = 1; j <= mod.q_[i - 1]; ++j) mod.lex_.push_back({i, static_cast<int>(j)});
    mod.finish_common();

    const EuclidData& eu = mod.euclid_;
    for (const ChainIndex& ix : mod.lex_) {
        WeightEntry w;
        const int i = ix.i;
        const Int j(ix.j);
        w.rho = eu.r(i - 1) - (j - 1) * eu.r(i);
        const Int base_p = eu.P(i - 2) + (j - 1) * eu.P(i - 1);
        const Int base_q = eu.Q(i - 2) + (j - 1) * eu.Q(i - 1);
        const Int base_s = base_p + base_q;
        if (i % 2 == 1) {
            w.lam = base_s;
            w.mu = w.rho;
            w.lam_bar = base_p;
            w.lam_hat = base_q;
        } else {
            w.lam = w.rho;
            w.mu = base_s;
            w.mu_bar = base_p;
            w.mu_hat = base_q;
        }
        mod.weights_.emplace(ix, std::move(w));
    }

    mod.main_ = make_chart(Int(m), Int(a));
    mod.second_ = make_chart(Int(m), Int(mod.b_));
    mod.validate_nonnormal();
    return mod;
}

void SltModel::validate_nonnormal() {
    Chart& co = main_;
    Chart& ce = *second_;
    if (static_cast<int>(odd_.size()) != co.chain.curve_count())
        throw internal_error("nonnormal: |I_o| != chart O curve count");
    if (static_cast<int>(even_.size()) != ce.chain.curve_count())
        throw internal_error("nonnormal: |I_e| != chart E curve count");

    // chart O carries I_o in lex order with matching curve exponents
    co.order.clear();
    for (size_t idx = 0; idx < odd_.size(); ++idx) {
        const ChainIndex& ix = odd_[idx];
        const int p = static_cast<int>(idx) + 1;
        const WeightEntry& w = weights_.at(ix);
        if (w.lam != co.surface.lambda(p) || w.mu != co.surface.mu(p))
            throw internal_error("nonnormal: chart O exponents disagree at " + to_string(ix));
        if (w.lam_hat != co.chain.rays[p][0] || w.lam != co.chain.rays[p][1])
            throw internal_error("nonnormal: chart O ray disagrees at " + to_string(ix));
        co.pos[ix] = p;
        co.order.push_back(ix);
    }
    // chart E carries I_e in lex order with the two exponents exchanged
    ce.order.clear();
    for (size_t idx = 0; idx < even_.size(); ++idx) {
        const ChainIndex& ix = even_[idx];
        const int p = static_cast<int>(idx) + 1;
        const WeightEntry& w = weights_.at(ix);
        if (w.mu != ce.surface.lambda(p) || w.lam != ce.surface.mu(p))
            throw internal_error("nonnormal: chart E exponents disagree at " + to_string(ix));
        ce.pos[ix] = p;
        ce.order.push_back(ix);
    }
}

Neighbors chain_neighbors(const SltModel& model, const ChainIndex& ix) {
    const Chart& c = model.chart_of(ix);
    const int p = c.position(ix);
    Neighbors n;
    if (p > 1) n.left = c.order[p - 2];
    if (p < static_cast<int>(c.order.size())) n.right = c.order[p];
    return n;
}

BoundaryReport boundary_identities(const SltModel& model) {
    if (!model.is_normal())
        throw std::invalid_argument("boundary_identities: normal models only");
    const EuclidData& eu = model.plus_euclid();
    const int k = model.k();
    const long d = model.d(), a = model.a(), b = model.b();
    const Int qk(model.q(k));

    // even-row formulas at (k, q_k)
    BoundaryReport rep;
    const Int rho = eu.r(k - 1) - (qk - 1) * eu.r(k);
    const Int base_p = eu.P(k - 2) + (qk - 1) * eu.P(k - 1);
    const Int base_q = eu.Q(k - 2) + (qk - 1) * eu.Q(k - 1);
    rep.extended_mu = base_p + base_q;
    rep.extended_lambda = (-base_p + d * a * rho) + (-base_q + d * b * rho);

    const WeightEntry& top = model.weight(model.boundary());
    rep.matches_boundary = rep.extended_mu == top.mu && rep.extended_lambda == top.lam;
    const WeightEntry& first = model.weight({k + 1, 1});
    rep.matches_first_block = rep.extended_mu == first.mu && rep.extended_lambda == first.lam;

    rep.rho_extension_unit = true;
    for (long j = 1; j <= d; ++j)
        if (eu.r(k) - (Int(j) - 1) * eu.r(k + 1) != 1) rep.rho_extension_unit = false;
    return rep;
}

}  // namespace slt
