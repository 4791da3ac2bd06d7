#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "slt/cyclic_quotient.hpp"

using namespace slt;

TEST_CASE("resolution chains") {
    auto [s49, c49] = resolve(49, 34);
    CHECK(c49.self_int == std::vector<Int>{-2, -2, -5, -4});
    CHECK(c49.rays.front() == Ray{1, 0});
    CHECK(c49.rays.back() == Ray{15, 49});
    CHECK(c49.rays[1] == Ray{1, 1});
    CHECK(c49.rays[2] == Ray{1, 2});
    CHECK(c49.rays[3] == Ray{1, 3});
    CHECK(c49.rays[4] == Ray{4, 13});

    auto [s4, c4] = resolve(4, 3);
    CHECK(c4.self_int == std::vector<Int>{-2, -2, -2});
    auto [s2, c2] = resolve(2, 1);
    CHECK(c2.self_int == std::vector<Int>{-2});

    CHECK_THROWS_AS(resolve(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(resolve(4, 5), std::invalid_argument);
}

TEST_CASE("intersection matrix") {
    auto [s, c] = resolve(49, 34);
    const auto m = intersection_matrix(c);
    CHECK(m[0][0] == -2);
    CHECK(m[2][2] == -5);
    CHECK(m[0][1] == 1);
    CHECK(m[1][0] == 1);
    CHECK(m[0][2] == 0);

    auto [s2, c2] = resolve(2, 1);
    CHECK(intersection_matrix(c2) == std::vector<std::vector<Int>>{{-2}});
}

TEST_CASE("pullback coefficients") {
    auto [s, c] = resolve(49, 34);
    const PullbackMatrix pm = pullback_coeffs(s);
    CHECK(pm.alpha[2][2] == Rat(12, 49));
    CHECK(pm.alpha[2][3] == Rat(3, 49));
    CHECK(pm.alpha[3][2] == Rat(3, 49));

    auto [s21, c21] = resolve(2, 1);
    CHECK(pullback_coeffs(s21).alpha[0][0] == Rat(1, 2));

    const std::vector<Rat> row = pullback_oracle(s, 4);
    CHECK(row == std::vector<Rat>{Rat(1, 49), Rat(2, 49), Rat(3, 49), Rat(13, 49)});
    CHECK(pullback_oracle(s21, 1) == std::vector<Rat>{Rat(1, 2)});
}

TEST_CASE("oracle equals closed form exhaustively") {
    for (long r = 2; r <= 60; ++r)
        for (long s = 1; s < r; ++s) {
            if (std::gcd(r, s) != 1) continue;
            auto [surf, chain] = resolve(r, s);
            const PullbackMatrix pm = pullback_coeffs(surf);
            for (int i = 1; i <= surf.k(); ++i) {
                const auto row = pullback_oracle(surf, i);
                for (int j = 1; j <= surf.k(); ++j)
                    REQUIRE(row[j - 1] == pm.alpha[i - 1][j - 1]);
            }
        }
}

TEST_CASE("divisor pairing") {
    auto [s, c] = resolve(49, 34);
    const std::vector<Int> v{0, 0, 1, 3};
    CHECK(pair_divisors(s, v, v) == Rat(3));
    const std::vector<Int> zero{0, 0, 0, 0};
    CHECK(pair_divisors(s, zero, v) == Rat(0));
    const std::vector<Int> e1{1, 0, 0, 0}, e4{0, 0, 0, 1};
    CHECK(pair_divisors(s, e1, e4) == Rat(1, 49));
    // symmetry and bilinearity spot checks
    const std::vector<Int> a{2, 1, 0, 3}, b{0, 4, 1, 1};
    CHECK(pair_divisors(s, a, b) == pair_divisors(s, b, a));
    std::vector<Int> apb(4);
    for (int i = 0; i < 4; ++i) apb[i] = a[i] + b[i];
    CHECK(pair_divisors(s, apb, b) == pair_divisors(s, a, b) + pair_divisors(s, b, b));
}

TEST_CASE("semi-invariant weights") {
    auto [s, c] = resolve(49, 34);
    CHECK(semi_invariant_weight(s, 3, 0) == 4);
    CHECK(semi_invariant_weight(s, 13, 0) == 1);
    CHECK(semi_invariant_weight(s, 0, 0) == 0);
    for (int i = 1; i <= s.k(); ++i)
        CHECK(semi_invariant_weight(s, s.lambda(i), 0) == mod(s.mu(i), s.r));
}
