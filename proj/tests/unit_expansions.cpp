#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "slt/expansions.hpp"

using namespace slt;

namespace {
using LL = std::vector<long>;
const SltModel& x517() {
    static const SltModel m = SltModel::build_class_t(5, 1, 7);
    return m;
}
}  // namespace

TEST_CASE("lambda expansion on X(5,1,7)") {
    const SltModel& m = x517();
    CHECK(lambda_expand(m, 3).digits == LL{0, 1});
    CHECK(lambda_expand(m, 5).digits == LL{2, 1});
    CHECK(lambda_expand(m, 6).digits == LL{0, 2});
    CHECK(lambda_valuation(m, LambdaSeq{{1, 0}}) == 1);
    CHECK(lambda_valuation(m, LambdaSeq{{0, 2}}) == 6);
    CHECK(lambda_valuation(m, LambdaSeq{{1, 1}}) == 4);
    CHECK_THROWS_AS(lambda_expand(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_expand(m, 7), std::invalid_argument);

    CHECK(is_lambda_sequence(m, {0, 2}));
    CHECK_FALSE(is_lambda_sequence(m, {0, 0}));
    CHECK_FALSE(is_lambda_sequence(m, {1, 2}));  // value 7 exceeds m-1
}

TEST_CASE("mu expansion on X(5,1,7)") {
    const SltModel& m = x517();
    CHECK(mu_expand(m, 3).digits == LL{3, 0});
    CHECK(mu_expand(m, 6).digits == LL{2, 2});
    CHECK(mu_expand(m, 1).digits == LL{1, 0});
    CHECK(mu_valuation(m, MuSeq{{2, 2}}) == 6);  // top term uses the boundary value 4
}

TEST_CASE("tau expansion on X(5,1,7)") {
    const SltModel& m = x517();
    CHECK(tau_expand(m, 4).digits == LL{1, 1});
    CHECK(tau_expand(m, 2).digits == LL{2, 0});
    CHECK(tau_expand(m, 3).digits == LL{0, 1});
    CHECK_THROWS_AS(tau_expand(m, 5), std::invalid_argument);  // m-2 is out of range
}

TEST_CASE("enumerations on X(5,1,7)") {
    const SltModel& m = x517();
    const auto lam = enumerate_sequences(m, SeqKind::Lambda);
    CHECK(lam.size() == 6);
    for (size_t i = 0; i < lam.size(); ++i)
        CHECK(lambda_valuation(m, LambdaSeq{lam[i]}) == Int(i + 1));
    CHECK(lam.back() == LL{0, 2});  // the maximal sequence

    const auto mu = enumerate_sequences(m, SeqKind::Mu);
    CHECK(mu.size() == 6);
    for (size_t i = 0; i < mu.size(); ++i)
        CHECK(mu_valuation(m, MuSeq{mu[i]}) == Int(i + 1));

    const auto tau = enumerate_sequences(m, SeqKind::Tau);
    CHECK(tau.size() == 4);
    const auto tau_all = enumerate_tau_unrestricted(m);
    CHECK(tau_all.size() == 5);
    CHECK(tau_valuation(m, TauSeq{tau_all.back()}) == 5);  // the all-max extra element
}

TEST_CASE("star condition") {
    const SltModel& m = x517();
    for (const auto& digits : enumerate_sequences(m, SeqKind::Lambda))
        CHECK(star_condition(m, digits, 1));
    // a tuple violating the bound: lambda-partial at level 1 is j_1
    CHECK_FALSE(star_condition(m, {5, 0}, 1));
}

TEST_CASE("remainder inequalities and the unit sum") {
    const SltModel& m = x517();
    CHECK(remainder_inequality_check(m, {1, 0}, 1));
    CHECK(remainder_inequality_check(m, {0, 1}, 2));
    CHECK(tau_unit_check(m));
}

TEST_CASE("order isomorphism across a sweep") {
    auto run = [](const SltModel& m) {
        const Int top = m.m() - 1;
        const auto lam = enumerate_sequences(m, SeqKind::Lambda);
        REQUIRE(Int(lam.size()) == top);
        Int v = 1;
        for (const auto& d : lam) {
            REQUIRE(lambda_valuation(m, LambdaSeq{d}) == v);
            REQUIRE(lambda_expand(m, v).digits == d);
            ++v;
        }
        const auto mu = enumerate_sequences(m, SeqKind::Mu);
        REQUIRE(Int(mu.size()) == top);
        v = 1;
        for (const auto& d : mu) {
            REQUIRE(mu_valuation(m, MuSeq{d}) == v);
            REQUIRE(mu_expand(m, v).digits == d);
            ++v;
        }
        const auto tau = enumerate_sequences(m, SeqKind::Tau);
        REQUIRE(Int(tau.size()) == m.m() - 3);
        v = 1;
        for (const auto& d : tau) {
            REQUIRE(tau_valuation(m, TauSeq{d}) == v);
            REQUIRE(tau_expand(m, v).digits == d);
            ++v;
        }
    };
    for (long mm = 3; mm <= 14; ++mm)
        for (long a = mm / 2 + 1; a < mm; ++a) {
            if (std::gcd(a, mm) != 1) continue;
            for (long d = 1; d <= 2; ++d) run(SltModel::build_class_t(a, d, mm));
            run(SltModel::build_nonnormal(a, mm));
        }
}
