#include "slt/index_bound.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace slt {

Int B_of(const std::vector<Int>& composition, const Int& N) {
    if (N < 1) throw std::invalid_argument("B_of: requires N >= 1");
    if (composition.empty()) throw std::invalid_argument("B_of: composition must be nonempty");
    Int prev2 = N, prev1 = N;
    for (const Int& part : composition) {
        if (part < 1) throw std::invalid_argument("B_of: parts must be positive");
        Int cur = part * prev1 + prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return prev1;
}

namespace {

using MemoKey = std::tuple<long, Int, Int>;

Int best_tail(long budget, const Int& prev1, const Int& prev2, std::map<MemoKey, Int>& memo) {
    if (budget == 0) return prev1;
    const MemoKey key{budget, prev1, prev2};
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int best = 0;
    for (long part = 1; part <= budget; ++part) {
        Int v = best_tail(budget - part, Int(part) * prev1 + prev2, prev1, memo);
        if (v > best) best = v;
    }
    memo.emplace(key, best);
    return best;
}

// All-ones continuation value F_{M+1} x + F_M y; replacing a part L >= 2 by
// (1, L-1) never decreases the state componentwise, so this is also an upper
// bound for any continuation and the pruned search below stays exact.
Int ones_tail(long budget, const Int& prev1, const Int& prev2) {
    Int x = prev1, y = prev2;
    for (long i = 0; i < budget; ++i) {
        Int nx = x + y;
        y = x;
        x = nx;
    }
    return x;
}

void pruned_tail(long budget, const Int& prev1, const Int& prev2, Int& best) {
    if (budget == 0) {
        if (prev1 > best) best = prev1;
        return;
    }
    if (ones_tail(budget, prev1, prev2) <= best) return;
    for (long part = 1; part <= budget; ++part)
        pruned_tail(budget - part, Int(part) * prev1 + prev2, prev1, best);
}

}  // namespace

Int B_max(const Int& M, const Int& N) {
    if (M < 1 || N < 1) throw std::invalid_argument("B_max: requires M, N >= 1");
    const long budget = to_long(M, "composition size");
    if (budget > 2000) throw std::invalid_argument("B_max: composition size too large");

    static std::mutex cache_mutex;
    static std::map<std::pair<long, Int>, Int> cache;
    {
        std::scoped_lock lock(cache_mutex);
        auto it = cache.find({budget, N});
        if (it != cache.end()) return it->second;
    }
    Int result;
    if (budget <= 18) {
        std::map<MemoKey, Int> memo;
        result = best_tail(budget, N, N, memo);
    } else {
        Int best = 0;
        pruned_tail(budget, N, N, best);
        result = best;
    }
    std::scoped_lock lock(cache_mutex);
    cache.emplace(std::make_pair(budget, N), result);
    return result;
}

IndexBoundReport verify_index_bound(const SltModel& model, const Int& n) {
    if (n < 1) throw std::invalid_argument("verify_index_bound: requires n >= 1");
    IndexBoundReport rep;
    rep.index = model.gorenstein_index();
    rep.n_star = member_class_of_nk(model, n);
    if (rep.n_star == 0) {
        // class trivial: two general members miss the singular point entirely
        rep.trivial = true;
        rep.dd_prime = Rat(0);
        rep.dd_integral = true;
        rep.bound = B_max(1, n);
        rep.ok = rep.index <= rep.bound;
        return rep;
    }
    const DivisorVector v = nu(model, rep.n_star);
    rep.dd_prime = pair_closed_form(model, v, v);
    rep.dd_integral = is_integer(rep.dd_prime);
    if (!rep.dd_integral) {
        rep.bound = 0;
        rep.ok = false;
        return rep;
    }
    rep.bound = B_max(rep.dd_prime.get_num() + 1, n);
    rep.ok = rep.index <= rep.bound;
    return rep;
}

}  // namespace slt
