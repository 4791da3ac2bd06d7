#include "slt/contfrac.hpp"

#include <algorithm>

namespace slt {

PlusCF plus_expand(const Fraction& f) {
    if (f.num() < f.den())
        throw std::invalid_argument("plus_expand: requires num >= den");
    PlusCF cf;
    Int r0 = f.num(), r1 = f.den();
    while (r1 > 0) {
        Int q = fdiv(r0, r1);
        Int r2 = r0 - q * r1;
        cf.terms.push_back(q);
        r0 = r1;
        r1 = r2;
    }
    return cf;
}

MinusCF minus_expand(const Fraction& f) {
    if (f.num() <= f.den())
        throw std::invalid_argument("minus_expand: requires num > den");
    MinusCF cf;
    Int r0 = f.num(), r1 = f.den();
    while (r1 > 0) {
        Int q = cdiv(r0, r1);
        Int r2 = q * r1 - r0;
        cf.terms.push_back(q);
        r0 = r1;
        r1 = r2;
    }
    return cf;
}

Fraction eval_plus(const PlusCF& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("eval_plus: empty term sequence");
    for (const Int& q : cf.terms)
        if (q < 1) throw std::invalid_argument("eval_plus: terms must be >= 1");
    // right-to-left: num/den <- q + den/num
    Int num = cf.terms.back(), den = 1;
    for (int i = static_cast<int>(cf.terms.size()) - 2; i >= 0; --i) {
        Int n2 = cf.terms[i] * num + den;
        den = num;
        num = n2;
    }
    return Fraction(num, den);
}

Fraction eval_minus(const MinusCF& cf) {
    if (cf.terms.empty()) throw std::invalid_argument("eval_minus: empty term sequence");
    for (const Int& q : cf.terms)
        if (q <= 1) throw std::invalid_argument("eval_minus: terms must be >= 2");
    Int num = cf.terms.back(), den = 1;
    for (int i = static_cast<int>(cf.terms.size()) - 2; i >= 0; --i) {
        Int n2 = cf.terms[i] * num - den;
        den = num;
        num = n2;
    }
    return Fraction(num, den);
}

namespace {

EuclidData build_tables(CFKind kind, const std::vector<Int>& q, const Int& r0, const Int& r1) {
    if (r0 <= 0 || r1 <= 0) throw std::invalid_argument("euclid_data: seed must be positive");
    if (gcd(r0, r1) != 1) throw std::invalid_argument("euclid_data: seed must be coprime");
    const int k = static_cast<int>(q.size());
    EuclidData e;
    e.kind = kind;
    e.remainders.reserve(k + 2);
    e.remainders.push_back(r0);
    e.remainders.push_back(r1);
    e.convP = {0, 1};
    e.convQ = {kind == CFKind::Plus ? Int(1) : Int(-1), 0};
    for (int i = 1; i <= k; ++i) {
        const Int& qi = q[i - 1];
        const Int &rp = e.remainders[i - 1], &rc = e.remainders[i];
        Int rn = (kind == CFKind::Plus) ? Int(rp - qi * rc) : Int(qi * rc - rp);
        if (rn < 0 || (rn == 0 && i < k))
            throw std::invalid_argument("euclid_data: seed inconsistent with terms");
        e.remainders.push_back(rn);
        if (kind == CFKind::Plus) {
            e.convP.push_back(qi * e.P(i - 1) + e.P(i - 2));
            e.convQ.push_back(qi * e.Q(i - 1) + e.Q(i - 2));
        } else {
            e.convP.push_back(qi * e.P(i - 1) - e.P(i - 2));
            e.convQ.push_back(qi * e.Q(i - 1) - e.Q(i - 2));
        }
    }
    if (e.remainders[k + 1] != 0 || e.remainders[k] != 1)
        throw std::invalid_argument("euclid_data: seed does not terminate on the given terms");
    if (e.P(k) != r0 || e.Q(k) != r1)
        throw internal_error("euclid_data: convergents fail to reproduce the seed");
    return e;
}

void compare_prediction(PredictionReport& rep, const std::vector<Int>& truth) {
    rep.matches = true;
    if (rep.predicted.size() != truth.size()) {
        rep.matches = false;
        rep.mismatch.push_back(-1);
    }
    const size_t n = std::min(rep.predicted.size(), truth.size());
    for (size_t i = 0; i < n; ++i) {
        if (rep.predicted[i] != truth[i]) {
            rep.matches = false;
            rep.mismatch.push_back(static_cast<int>(i));
        }
    }
}

void push_run(std::vector<Int>& v, const Int& len) {
    for (Int i = 0; i < len; ++i) v.push_back(2);
}

}  // namespace

EuclidData euclid_data(const PlusCF& cf, const Int& r0, const Int& r1) {
    return build_tables(CFKind::Plus, cf.terms, r0, r1);
}

EuclidData euclid_data(const MinusCF& cf, const Int& r0, const Int& r1) {
    return build_tables(CFKind::Minus, cf.terms, r0, r1);
}

TransformResult riemenschneider_transform(const Int& a, const Int& m) {
    if (a <= 0 || m <= 0 || gcd(a, m) != 1 || 2 * a <= m || a >= m)
        throw std::invalid_argument("riemenschneider_transform: requires gcd(a,m)=1, m/2 < a < m");
    const Int b = m - a;
    TransformResult res;
    res.ab = plus_expand(Fraction(a, b));
    res.m_over_a = minus_expand(Fraction(m, a));
    res.m_over_b = minus_expand(Fraction(m, b));

    const std::vector<Int>& q = res.ab.terms;
    const int k = static_cast<int>(q.size());
    std::vector<Int>& pa = res.pred_a.predicted;
    std::vector<Int>& pb = res.pred_b.predicted;

    if (k % 2 == 0) {
        // m/a: (2,q1), q2+2, (2,q3-1), q4+2, ..., (2,q_{k-1}-1), qk+1
        push_run(pa, q[0]);
        for (int i = 2; i <= k - 2; i += 2) {
            pa.push_back(q[i - 1] + 2);
            push_run(pa, q[i] - 1);
        }
        pa.push_back(q[k - 1] + 1);
        // m/b: q1+2, (2,q2-1), q3+2, ..., q_{k-1}+2, (2,qk+1)  [tail as printed]
        for (int i = 1; i <= k - 1; i += 2) {
            pb.push_back(q[i - 1] + 2);
            if (i + 1 < k)
                push_run(pb, q[i] - 1);
            else
                push_run(pb, q[k - 1] + 1);
        }
    } else {
        // m/a: (2,q1), q2+2, (2,q3-1), ..., q_{k-1}+2, (2,qk-1)
        push_run(pa, q[0]);
        for (int i = 2; i <= k - 1; i += 2) {
            pa.push_back(q[i - 1] + 2);
            push_run(pa, q[i] - 1);
        }
        // m/b: q1+2, (2,q2-1), ..., q_{k-2}+2, (2,q_{k-1}-1), qk+1
        for (int i = 1; i <= k - 2; i += 2) {
            pb.push_back(q[i - 1] + 2);
            push_run(pb, q[i] - 1);
        }
        pb.push_back(q[k - 1] + 1);
    }
    compare_prediction(res.pred_a, res.m_over_a.terms);
    compare_prediction(res.pred_b, res.m_over_b.terms);
    return res;
}

ClassTCFResult class_t_cf(const Int& a, const Int& b, const Int& d) {
    if (a <= b || b < 1 || d < 1 || gcd(a, b) != 1)
        throw std::invalid_argument("class_t_cf: requires a > b >= 1, gcd(a,b)=1, d >= 1");
    const Int m = a + b;
    ClassTCFResult res;
    res.truth = plus_expand(Fraction(d * m * a - 1, d * m * b + 1));

    const PlusCF ab = plus_expand(Fraction(a, b));
    const std::vector<Int>& q = ab.terms;
    const int k = static_cast<int>(q.size());
    if (k < 2) return res;  // index ranges of the case displays collide at k=1
    res.formula_applicable = true;

    std::vector<Int>& p = res.pred.predicted;
    auto mirror = [&](int hi) {
        // q_hi, q_{hi-1}, ..., q_2
        for (int i = hi; i >= 2; --i) p.push_back(q[i - 1]);
    };
    if (d == 1 && k % 2 == 0) {
        for (int i = 1; i <= k - 1; ++i) p.push_back(q[i - 1]);
        p.push_back(q[k - 1] + 1);
        p.push_back(q[k - 1] - 1);
        mirror(k - 1);
        p.push_back(q[0] + 1);
    } else if (d == 1 && k % 2 == 1) {
        for (int i = 1; i <= k - 1; ++i) p.push_back(q[i - 1]);
        p.push_back(q[k - 1] - 1);
        p.push_back(q[k - 1] + 1);
        mirror(k - 1);
        p.push_back(q[0] + 1);
    } else if (d >= 2 && k % 2 == 0) {
        for (int i = 1; i <= k; ++i) p.push_back(q[i - 1]);
        p.push_back(d - 1);
        p.push_back(1);
        p.push_back(q[k - 1] - 1);
        mirror(k - 1);
        p.push_back(q[0] + 1);
    } else {
        for (int i = 1; i <= k - 1; ++i) p.push_back(q[i - 1]);
        p.push_back(q[k - 1] - 1);
        p.push_back(1);
        p.push_back(d - 1);
        mirror(k);
        p.push_back(q[0] + 1);
    }
    compare_prediction(res.pred, res.truth.terms);
    return res;
}

}  // namespace slt
