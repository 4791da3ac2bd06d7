#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "slt/contfrac.hpp"

using namespace slt;

namespace {
std::vector<Int> iv(std::initializer_list<long> v) { return {v.begin(), v.end()}; }
}  // namespace

TEST_CASE("plus expansions") {
    CHECK(plus_expand(Fraction(5, 2)).terms == iv({2, 2}));
    CHECK(plus_expand(Fraction(3, 2)).terms == iv({1, 2}));
    CHECK(plus_expand(Fraction(1, 1)).terms == iv({1}));
    CHECK(plus_expand(Fraction(34, 15)).terms == iv({2, 3, 1, 3}));
    CHECK_THROWS_AS(plus_expand(Fraction(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Fraction(-3, 2), std::invalid_argument);
}

TEST_CASE("minus expansions") {
    CHECK(minus_expand(Fraction(49, 34)).terms == iv({2, 2, 5, 4}));
    CHECK(minus_expand(Fraction(4, 3)).terms == iv({2, 2, 2}));
    CHECK(minus_expand(Fraction(2, 1)).terms == iv({2}));
    CHECK(minus_expand(Fraction(9, 5)).terms == iv({2, 5}));
    CHECK_THROWS_AS(minus_expand(Fraction(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(minus_expand(Fraction(3, 4)), std::invalid_argument);
}

TEST_CASE("evaluation inverts expansion") {
    CHECK(eval_plus(PlusCF{iv({2, 2})}) == Fraction(5, 2));
    CHECK(eval_plus(PlusCF{iv({5})}) == Fraction(5, 1));
    CHECK(eval_minus(MinusCF{iv({2, 2, 5, 4})}) == Fraction(49, 34));
    CHECK_THROWS_AS(eval_minus(MinusCF{iv({2, 1, 3})}), std::invalid_argument);
    // non-canonical plus sequences evaluate too
    CHECK(eval_plus(PlusCF{iv({1, 1})}) == Fraction(2, 1));

    for (long r = 2; r <= 120; ++r)
        for (long s = 1; s < r; ++s) {
            if (std::gcd(r, s) != 1) continue;
            const Fraction f{r, s};
            REQUIRE(eval_plus(plus_expand(f)) == f);
            REQUIRE(eval_minus(minus_expand(f)) == f);
        }
}

TEST_CASE("euclid tables") {
    const Fraction f{5, 2};
    const EuclidData ep = euclid_data(plus_expand(f), 5, 2);
    CHECK(ep.remainders == iv({5, 2, 1, 0}));
    CHECK(ep.convP == iv({0, 1, 2, 5}));
    CHECK(ep.convQ == iv({1, 0, 1, 2}));

    const EuclidData em = euclid_data(minus_expand(Fraction(49, 34)), 49, 34);
    CHECK(em.remainders == iv({49, 34, 19, 4, 1, 0}));
    CHECK(em.convP == iv({0, 1, 2, 3, 13, 49}));
    CHECK(em.Q(4) == 34);

    const EuclidData e1 = euclid_data(plus_expand(Fraction(1, 1)), 1, 1);
    CHECK(e1.remainders == iv({1, 1, 0}));
    CHECK(e1.convP == iv({0, 1, 1}));

    CHECK_THROWS_AS(euclid_data(plus_expand(Fraction(5, 2)), 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(euclid_data(plus_expand(Fraction(5, 2)), 10, 4), std::invalid_argument);

    // convergent identities
    for (int i = 0; i <= em.k(); ++i)
        CHECK(em.P(i) * em.Q(i - 1) - em.Q(i) * em.P(i - 1) == -1);
    for (int i = 0; i <= ep.k(); ++i)
        CHECK(ep.P(i) * ep.Q(i - 1) - ep.Q(i) * ep.P(i - 1) == (i % 2 == 0 ? 1 : -1));
    // semi-invariance seed identity (minus)
    for (int i = 0; i <= em.k(); ++i)
        CHECK(em.r(1) * em.P(i) - em.r(0) * em.Q(i) == em.r(i + 1));
}

TEST_CASE("chain splice transforms") {
    const TransformResult t1 = riemenschneider_transform(5, 7);
    CHECK(t1.m_over_a.terms == iv({2, 2, 3}));
    CHECK(t1.m_over_b.terms == iv({4, 2}));
    CHECK(t1.pred_a.matches);

    const TransformResult t2 = riemenschneider_transform(2, 3);
    CHECK(t2.m_over_a.terms == iv({2, 2}));
    CHECK(t2.m_over_b.terms == iv({3}));

    // soundness sweep; the even-k tail of the m/b prediction is the known
    // erratum, everything else must match
    for (long m = 3; m <= 80; ++m)
        for (long a = m / 2 + 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const TransformResult t = riemenschneider_transform(a, m);
            REQUIRE(eval_minus(t.m_over_a) == Fraction(m, a));
            REQUIRE(eval_minus(t.m_over_b) == Fraction(m, m - a));
            REQUIRE(t.pred_a.matches);
            if (t.ab.terms.size() % 2 == 1) REQUIRE(t.pred_b.matches);
        }

    CHECK_THROWS_AS(riemenschneider_transform(3, 7), std::invalid_argument);  // 2a < m
    CHECK_THROWS_AS(riemenschneider_transform(4, 6), std::invalid_argument);
}

TEST_CASE("class T plus fraction") {
    const ClassTCFResult r1 = class_t_cf(5, 2, 1);
    CHECK(r1.truth.terms == iv({2, 3, 1, 3}));
    CHECK(r1.formula_applicable);
    CHECK(r1.pred.matches);

    const ClassTCFResult r2 = class_t_cf(2, 1, 2);
    CHECK(r2.truth.terms == iv({1, 1, 1, 3}));
    CHECK_FALSE(r2.formula_applicable);  // k = 1

    const ClassTCFResult r3 = class_t_cf(2, 1, 1);
    CHECK(r3.truth.terms == iv({1, 4}));
    CHECK_FALSE(r3.formula_applicable);

    for (long a = 2; a <= 14; ++a)
        for (long b = 1; b < a; ++b) {
            if (std::gcd(a, b) != 1) continue;
            for (long d = 1; d <= 3; ++d) {
                const ClassTCFResult r = class_t_cf(a, b, d);
                const long k = static_cast<long>(plus_expand(Fraction(a, b)).terms.size());
                if (k >= 2) {
                    REQUIRE(r.formula_applicable);
                    REQUIRE(r.pred.matches);
                    REQUIRE(Int(r.truth.terms.size()) == (d == 1 ? 2 * k : 2 * k + 2));
                }
            }
        }
}
