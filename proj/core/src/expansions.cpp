#include "slt/expansions.hpp"

#include <algorithm>

namespace slt {

namespace {

void check_arity(const SltModel& model, const std::vector<long>& digits) {
    if (static_cast<int>(digits.size()) != model.k())
        throw std::invalid_argument("expansion sequence has wrong arity");
    for (long v : digits)
        if (v < 0) throw std::invalid_argument("expansion digits must be non-negative");
}

bool all_zero(const std::vector<long>& digits) {
    return std::all_of(digits.begin(), digits.end(), [](long v) { return v == 0; });
}

// partial value of a lambda vector through odd level h (-1 gives 0)
Int lambda_partial(const SltModel& model, const std::vector<long>& g, int h) {
    Int acc = 0;
    for (int i = 1; i <= h; i += 2) {
        if (i > 1) acc += g[i - 2] * model.sigma(i - 2);  // l_{i-1} lambda^i_1
        acc += block_weight(model, i, g[i - 1]);
    }
    return acc;
}

// partial value of a mu vector through even level e (0 gives 0)
Int mu_partial(const SltModel& model, const std::vector<long>& g, int e) {
    Int acc = 0;
    for (int i = 2; i <= e; i += 2) {
        acc += g[i - 2] * model.sigma(i - 2);  // l_{i-1} mu^i_1
        acc += block_weight(model, i, g[i - 1]);
    }
    return acc;
}

}  // namespace

Int block_weight(const SltModel& model, int i, long j) {
    if (j == 0) return 0;
    return model.sigma(i - 2) + (Int(j) - 1) * model.sigma(i - 1);
}

Int lambda_valuation(const SltModel& model, const LambdaSeq& seq) {
    check_arity(model, seq.digits);
    const int k = model.k();
    return lambda_partial(model, seq.digits, k - 1) + seq.digits[k - 1] * model.sigma(k - 1);
}

Int mu_valuation(const SltModel& model, const MuSeq& seq) {
    check_arity(model, seq.digits);
    return mu_partial(model, seq.digits, model.k());
}

Int tau_valuation(const SltModel& model, const TauSeq& seq) {
    check_arity(model, seq.digits);
    Int acc = 0;
    for (int i = 1; i <= model.k(); ++i) acc += seq.digits[i - 1] * model.sigma(i - 1);
    return acc;
}

LambdaSeq lambda_expand(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("lambda_expand: requires 1 <= n <= m-1");
    const int k = model.k();
    LambdaSeq seq;
    seq.digits.assign(k, 0);
    Int cur = n;
    for (int h = k + 1; h >= 3; h -= 2) {
        if (h <= k - 1 && model.q(h) >= 2 && cur >= model.sigma(h - 2) + model.sigma(h - 1)) {
            Int j = 1 + (cur - model.sigma(h - 2)) / model.sigma(h - 1);
            if (j > model.q(h)) j = model.q(h);
            seq.digits[h - 1] = to_long(j, "lambda digit");
            cur -= block_weight(model, h, seq.digits[h - 1]);
        }
        seq.digits[h - 2] = to_long(cur / model.sigma(h - 2), "lambda digit");
        cur %= model.sigma(h - 2);
    }
    seq.digits[0] = to_long(cur, "lambda digit");

    if (lambda_valuation(model, seq) != n || !is_lambda_sequence(model, seq.digits))
        throw internal_error("lambda_expand: greedy output failed validation");
    return seq;
}

MuSeq mu_expand(const SltModel& model, const Int& n) {
    if (n < 1 || n > model.m() - 1)
        throw std::invalid_argument("mu_expand: requires 1 <= n <= m-1");
    const int k = model.k();
    MuSeq seq;
    seq.digits.assign(k, 0);
    Int cur = n;
    for (int e = k; e >= 2; e -= 2) {
        if (model.q(e) >= 2 && cur >= model.sigma(e - 2) + model.sigma(e - 1)) {
            Int j = 1 + (cur - model.sigma(e - 2)) / model.sigma(e - 1);
            const long jmax = (e == k) ? model.q(k) : model.q(e);
            if (j > jmax) j = jmax;
            seq.digits[e - 1] = to_long(j, "mu digit");
            cur -= block_weight(model, e, seq.digits[e - 1]);
        }
        seq.digits[e - 2] = to_long(cur / model.sigma(e - 2), "mu digit");
        cur %= model.sigma(e - 2);
    }
    if (cur != 0 || mu_valuation(model, seq) != n || !is_mu_sequence(model, seq.digits))
        throw internal_error("mu_expand: greedy output failed validation");
    return seq;
}

TauSeq tau_expand(const SltModel& model, const Int& t) {
    if (t < 1 || t > model.m() - 3)
        throw std::invalid_argument("tau_expand: requires 0 < t < m-2");
    const int k = model.k();
    TauSeq seq;
    seq.digits.assign(k, 0);
    Int rem = t;
    for (int i = k; i >= 1; --i) {
        Int cap = (i < k) ? Int(model.q(i)) : Int(model.q(k) - 1);
        Int ti = rem / model.sigma(i - 1);
        if (ti > cap) ti = cap;
        seq.digits[i - 1] = to_long(ti, "tau digit");
        rem -= ti * model.sigma(i - 1);
    }
    if (rem != 0) throw internal_error("tau_expand: greedy step left a remainder");

    // rewrite full blocks q_{i0} sigma_{i0-1} + sigma_{i0-2} into sigma_{i0};
    // the digit sum strictly drops, so this terminates.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i0 = 2; i0 <= k - 1; ++i0) {
            if (seq.digits[i0 - 2] == 0 || seq.digits[i0 - 1] != model.q(i0)) continue;
            const bool movable = (i0 < k - 1) ? seq.digits[i0] < model.q(i0 + 1)
                                              : seq.digits[k - 1] <= model.q(k) - 2;
            if (!movable) continue;
            seq.digits[i0 - 2] -= 1;
            seq.digits[i0 - 1] = 0;
            seq.digits[i0] += 1;
            changed = true;
            break;
        }
    }
    if (tau_valuation(model, seq) != t || !is_tau_sequence(model, seq.digits))
        throw internal_error("tau_expand: normalization failed validation");
    return seq;
}

bool is_lambda_sequence(const SltModel& model, const std::vector<long>& digits) {
    check_arity(model, digits);
    const int k = model.k();
    if (all_zero(digits)) return false;
    for (int i = 1; i <= k; i += 2) {
        const long j = digits[i - 1];
        if (j > model.q(i)) return false;
        if (i != 1 && j == 1) return false;
    }
    for (int i = 2; i <= k; i += 2) {
        const long bound = (i == k) ? model.q(k) : model.q(i) + 1;
        if (digits[i - 1] > bound) return false;
    }
    // greedy characterization: each l-digit is the quotient of the remaining
    // value, each j-digit is maximal.
    for (int h = 1; h <= k - 1; h += 2)
        if (lambda_partial(model, digits, h) >= model.sigma(h)) return false;
    for (int h = 3; h <= k - 1; h += 2) {
        const Int u = lambda_partial(model, digits, h - 2) + digits[h - 2] * model.sigma(h - 2);
        if (digits[h - 1] >= 2 && u >= model.sigma(h - 1)) return false;
        if (digits[h - 1] == 0 && u >= model.sigma(h - 1) + model.sigma(h - 2)) return false;
    }
    const Int total =
        lambda_partial(model, digits, k - 1) + digits[k - 1] * model.sigma(k - 1);
    return total >= 1 && total <= model.m() - 1;
}

bool is_mu_sequence(const SltModel& model, const std::vector<long>& digits) {
    check_arity(model, digits);
    const int k = model.k();
    if (all_zero(digits)) return false;
    for (int i = 1; i <= k; i += 2)
        if (digits[i - 1] > model.q(i) + 1) return false;
    for (int i = 2; i <= k; i += 2) {
        const long j = digits[i - 1];
        if (j == 1 || j > model.q(i)) return false;
    }
    for (int e = 2; e <= k - 2; e += 2)
        if (mu_partial(model, digits, e) >= model.sigma(e)) return false;
    for (int e = 2; e <= k; e += 2) {
        const Int u = mu_partial(model, digits, e - 2) + digits[e - 2] * model.sigma(e - 2);
        if (digits[e - 1] >= 2 && u >= model.sigma(e - 1)) return false;
        if (digits[e - 1] == 0 && u >= model.sigma(e - 1) + model.sigma(e - 2)) return false;
    }
    return true;
}

bool is_tau_sequence(const SltModel& model, const std::vector<long>& digits) {
    check_arity(model, digits);
    const int k = model.k();
    if (all_zero(digits)) return false;
    for (int i = 1; i <= k; ++i) {
        const long cap = (i < k) ? model.q(i) : model.q(k) - 1;
        if (digits[i - 1] > cap) return false;
    }
    for (int i0 = 2; i0 <= k - 2; ++i0)
        if (digits[i0 - 2] > 0 && digits[i0 - 1] == model.q(i0) && digits[i0] != model.q(i0 + 1))
            return false;
    if (k >= 3 && digits[k - 3] > 0 && digits[k - 2] == model.q(k - 1) &&
        digits[k - 1] != model.q(k) - 1)
        return false;
    return true;
}

bool is_lambda_sequence_literal(const SltModel& model, const std::vector<long>& digits) {
    check_arity(model, digits);
    const int k = model.k();
    if (all_zero(digits)) return false;
    auto q = [&](int i) { return model.q(i); };
    // (i)
    for (int i = 2; i <= k; i += 2) {
        const long bound = (i == k) ? q(k) : q(i) + 1;
        if (digits[i - 1] > bound) return false;
    }
    for (int i = 1; i <= k - 1; i += 2) {
        if (digits[i - 1] > q(i)) return false;
        if (i != 1 && digits[i - 1] == 1) return false;
    }
    // (ii)
    for (int i0 = 2; i0 <= k; i0 += 2) {
        if (digits[i0 - 1] != q(i0) + 1) continue;
        bool witness = false;
        for (int i1 = 1; i1 < i0 && !witness; i1 += 2) {
            for (int i2 = i0 + 1; i2 <= k - 1 && !witness; i2 += 2) {
                bool ok = true;
                for (int ip = i1 + 1; ip < i2; ip += 2)
                    if (ip != i0 && digits[ip - 1] != q(ip)) ok = false;
                for (int ip = i1; ip <= i2; ip += 2)
                    if (digits[ip - 1] != 0) ok = false;
                if (i1 >= 3 && digits[i1 - 2] >= q(i1 - 1)) ok = false;
                if (i2 + 1 <= k && digits[i2] >= q(i2)) ok = false;  // as printed: < q_{i2}
                if (ok) witness = true;
            }
        }
        if (!witness) return false;
    }
    // (iii)
    for (int i0 = 2; i0 + 1 <= k - 1; i0 += 2) {
        if (digits[i0 - 1] != q(i0) || digits[i0] < 2) continue;
        bool witness = false;
        for (int i3 = 1; i3 < i0 && !witness; i3 += 2) {
            bool ok = true;
            for (int ip = i3 + 1; ip <= i0; ip += 2)
                if (digits[ip - 1] != q(ip)) ok = false;
            for (int ip = i3; ip < i0; ip += 2)
                if (digits[ip - 1] != 0) ok = false;
            if (i3 >= 3 && digits[i3 - 2] >= q(i3 - 1)) ok = false;
            if (ok) witness = true;
        }
        if (!witness) return false;
    }
    return true;
}

bool is_mu_sequence_literal(const SltModel& model, const std::vector<long>& digits) {
    check_arity(model, digits);
    const int k = model.k();
    if (all_zero(digits)) return false;
    auto q = [&](int i) { return model.q(i); };
    for (int i = 1; i <= k - 1; i += 2)
        if (digits[i - 1] > q(i) + 1) return false;
    for (int i = 2; i <= k; i += 2) {
        // "2 <= j_i <= q_i" read with 0 admitted (condition (ii) quantifies
        // over j_{i'} = 0)
        if (digits[i - 1] == 1 || digits[i - 1] > q(i)) return false;
    }
    // (ii), with even witnesses; i1 = 0 allowed
    for (int i0 = 1; i0 <= k - 1; i0 += 2) {
        if (digits[i0 - 1] != q(i0) + 1) continue;
        bool witness = false;
        for (int i1 = 0; i1 < i0 && !witness; i1 += 2) {
            for (int i2 = i0 + 1; i2 <= k && !witness; i2 += 2) {
                bool ok = true;
                for (int ip = i1 + 1; ip < i2; ip += 2)
                    if (ip != i0 && digits[ip - 1] != q(ip)) ok = false;
                for (int ip = std::max(i1, 2); ip <= i2; ip += 2)
                    if (digits[ip - 1] != 0) ok = false;
                if (i1 >= 2 && digits[i1 - 2] >= q(i1)) ok = false;  // as printed: < q_{i1}
                if (i2 <= k - 2 && digits[i2] >= q(i2 + 1)) ok = false;
                if (ok) witness = true;
            }
        }
        if (!witness) return false;
    }
    // (iii)
    for (int i0 = 1; i0 + 1 <= k; i0 += 2) {
        if (digits[i0 - 1] != q(i0) || digits[i0] < 2) continue;
        bool witness = false;
        for (int i3 = 0; i3 < i0 && !witness; i3 += 2) {
            bool ok = true;
            for (int ip = i3 + 1; ip < i0; ip += 2)
                if (digits[ip - 1] != q(ip)) ok = false;
            for (int ip = std::max(i3, 2); ip < i0; ip += 2)
                if (digits[ip - 1] != 0) ok = false;
            if (i3 >= 2 && digits[i3 - 2] >= q(i3 - 1)) ok = false;
            if (ok) witness = true;
        }
        if (!witness) return false;
    }
    return true;
}

bool sequence_less(const std::vector<long>& a, const std::vector<long>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sequence_less: arity mismatch");
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

namespace {

std::vector<std::vector<long>> enumerate_box(const SltModel& model,
                                                  const std::vector<long>& bounds,
                                                  bool (*pred)(const SltModel&,
                                                               const std::vector<long>&)) {
    const int k = model.k();
    std::vector<std::vector<long>> out;
    std::vector<long> cur(k, 0);
    while (true) {
        if (pred(model, cur)) out.push_back(cur);
        int p = 0;
        while (p < k) {
            if (cur[p] < bounds[p]) {
                ++cur[p];
                std::fill(cur.begin(), cur.begin() + p, 0);
                break;
            }
            ++p;
        }
        if (p == k) break;
    }
    std::sort(out.begin(), out.end(), sequence_less);
    return out;
}

}  // namespace

std::vector<std::vector<long>> enumerate_sequences(const SltModel& model, SeqKind kind) {
    const int k = model.k();
    std::vector<long> bounds(k);
    switch (kind) {
        case SeqKind::Lambda:
            for (int i = 1; i <= k; ++i)
                bounds[i - 1] = (i % 2 == 1) ? model.q(i) : (i == k ? model.q(k) : model.q(i) + 1);
            return enumerate_box(model, bounds, &is_lambda_sequence);
        case SeqKind::Mu:
            for (int i = 1; i <= k; ++i)
                bounds[i - 1] = (i % 2 == 1) ? model.q(i) + 1 : model.q(i);
            return enumerate_box(model, bounds, &is_mu_sequence);
        case SeqKind::Tau: {
            auto all = enumerate_tau_unrestricted(model);
            const Int top = model.m() - 3;
            std::vector<std::vector<long>> out;
            for (auto& t : all)
                if (tau_valuation(model, TauSeq{t}) <= top) out.push_back(std::move(t));
            return out;
        }
    }
    throw std::logic_error("enumerate_sequences: unknown kind");
}

std::vector<std::vector<long>> enumerate_tau_unrestricted(const SltModel& model) {
    const int k = model.k();
    std::vector<long> bounds(k);
    for (int i = 1; i <= k; ++i) bounds[i - 1] = (i < k) ? model.q(i) : model.q(k) - 1;
    return enumerate_box(model, bounds, &is_tau_sequence);
}

bool star_condition(const SltModel& model, const std::vector<long>& digits, int h) {
    check_arity(model, digits);
    if (h < 1 || h > model.k() - 1) throw std::invalid_argument("star_condition: h out of range");
    if (h % 2 == 1) return lambda_partial(model, digits, h) < model.sigma(h);
    const Int v = lambda_partial(model, digits, h - 1) + digits[h - 1] * model.sigma(h - 1);
    if (v >= model.sigma(h - 1) + model.sigma(h)) return false;
    if (digits[h - 1] < model.q(h) || digits[h] >= 2)
        if (v >= model.sigma(h)) return false;
    return true;
}

bool remainder_inequality_check(const SltModel& model, const std::vector<long>& t, int i0) {
    check_arity(model, t);
    const int k = model.k();
    if (i0 < 1 || i0 > k || t[i0 - 1] <= 0)
        throw std::invalid_argument("remainder_inequality_check: need t_{i0} > 0");
    const EuclidData& eu = model.plus_euclid();
    Int sum = 0;
    for (int i = i0; i <= k; ++i) {
        Int term = t[i - 1] * eu.r(i);
        sum += (i % 2 == 1) ? term : -term;
    }
    if (i0 % 2 == 1) return sum > 0 && sum < eu.r(i0 - 1);
    return sum < 0 && sum > -eu.r(i0 - 1);
}

bool tau_unit_check(const SltModel& model) {
    const int k = model.k();
    const EuclidData& eu = model.plus_euclid();
    for (const auto& t : enumerate_tau_unrestricted(model)) {
        int i0 = 0;
        for (int i = 1; i <= k; ++i)
            if (t[i - 1] > 0) {
                i0 = i;
                break;
            }
        if (i0 % 2 == 0) continue;
        Int sum = 0;
        for (int i = i0; i <= k; ++i) {
            Int term = t[i - 1] * eu.r(i);
            sum += (i % 2 == 1) ? term : -term;
        }
        const bool shape = (i0 == k - 1) && t[k - 2] == 1 && t[k - 1] == model.q(k) - 1;
        if ((sum == 1) != shape) return false;
    }
    return true;
}

}  // namespace slt
