#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "slt/serialize.hpp"

using namespace slt;

namespace {
Int lam(const SltModel& m, int i, int j) { return m.lambda({i, j}); }
Int mu(const SltModel& m, int i, int j) { return m.mu({i, j}); }
}  // namespace

TEST_CASE("X(5,1,7)") {
    const SltModel m = SltModel::build_class_t(5, 1, 7);
    CHECK(m.k() == 2);
    CHECK(m.q() == std::vector<long>{2, 2});
    CHECK_FALSE(m.odd_canonical());
    CHECK(m.odd_indices() ==
          std::vector<ChainIndex>{{1, 1}, {1, 2}, {3, 1}});
    CHECK(m.even_indices() == std::vector<ChainIndex>{{2, 1}});

    // weight tables in lex order (1,1),(1,2),(2,1),(3,1)
    CHECK(lam(m, 1, 1) == 1);
    CHECK(lam(m, 1, 2) == 2);
    CHECK(lam(m, 2, 1) == 13);
    CHECK(lam(m, 3, 1) == 3);
    CHECK(mu(m, 1, 1) == 34);
    CHECK(mu(m, 1, 2) == 19);
    CHECK(mu(m, 2, 1) == 1);
    CHECK(mu(m, 3, 1) == 4);
    CHECK(m.weight({1, 1}).rho == 5);
    CHECK(m.weight({1, 2}).rho == 3);
    CHECK(m.weight({2, 1}).rho == 2);
    CHECK(m.weight({3, 1}).rho == 1);

    // chain order by ray slopes
    CHECK(m.chart_main().order ==
          std::vector<ChainIndex>{{1, 1}, {1, 2}, {3, 1}, {2, 1}});
    CHECK(m.chart_main().chain.self_int == std::vector<Int>{-2, -2, -5, -4});
    CHECK(m.gorenstein_index() == 7);
    CHECK(m.boundary() == ChainIndex{3, 1});

    const Neighbors n31 = chain_neighbors(m, {3, 1});
    CHECK(n31.left == ChainIndex{1, 2});
    CHECK(n31.right == ChainIndex{2, 1});
    CHECK_FALSE(chain_neighbors(m, {1, 1}).left.has_value());
    CHECK_FALSE(chain_neighbors(m, {2, 1}).right.has_value());

    const BoundaryReport br = boundary_identities(m);
    CHECK(br.extended_mu == 4);
    CHECK(br.matches_boundary);
    CHECK(br.matches_first_block);
    CHECK(br.rho_extension_unit);
}

TEST_CASE("odd-length source X(2,1,3)") {
    const SltModel m = SltModel::build_class_t(2, 1, 3);
    CHECK(m.odd_canonical());
    CHECK(m.q() == std::vector<long>{1, 1});
    // resolve(9,5) has two curves and |I| = 2
    CHECK(m.index_lex().size() == 2);
    CHECK(m.chart_main().chain.self_int == std::vector<Int>{-2, -5});
    CHECK(m.gorenstein_index() == 3);
}

TEST_CASE("gorenstein index X(2,3,5)") {
    const SltModel m = SltModel::build_class_t(4, 3, 5);  // a=4: 2a>m
    CHECK(m.gorenstein_index() == 5);
    const SltModel m2 = SltModel::build_class_t(3, 3, 5);
    CHECK(m2.gorenstein_index() == 5);
}

TEST_CASE("class T preconditions") {
    CHECK_THROWS_AS(SltModel::build_class_t(4, 1, 6), std::invalid_argument);  // gcd
    CHECK_THROWS_AS(SltModel::build_class_t(3, 1, 7), std::invalid_argument);  // 2a < m
    CHECK_THROWS_AS(SltModel::build_class_t(7, 1, 7), std::invalid_argument);
    CHECK_THROWS_AS(SltModel::build_class_t(5, 0, 7), std::invalid_argument);
}

TEST_CASE("nonnormal X(3,5)") {
    const SltModel m = SltModel::build_nonnormal(3, 5);
    CHECK(m.q() == std::vector<long>{1, 2});
    CHECK(m.odd_indices() == std::vector<ChainIndex>{{1, 1}, {3, 1}});
    CHECK(m.even_indices() == std::vector<ChainIndex>{{2, 1}, {2, 2}});
    CHECK(lam(m, 1, 1) == 1);
    CHECK(lam(m, 3, 1) == 2);
    CHECK(lam(m, 2, 1) == 2);
    CHECK(lam(m, 2, 2) == 1);
    CHECK(mu(m, 1, 1) == 3);
    CHECK(mu(m, 3, 1) == 1);
    CHECK(mu(m, 2, 1) == 1);
    CHECK(mu(m, 2, 2) == 3);
    // chart O is the (5,3) chart with cone (1,0),(2,5)
    CHECK(m.chart_main().surface.r == 5);
    CHECK(m.chart_main().surface.s == 3);
    CHECK(m.chart_main().chain.rays.back() == Ray{2, 5});
    CHECK(m.chart_second().surface.s == 2);
    CHECK(m.gorenstein_index() == 5);
    CHECK(m.a_inverse() == 2);
    CHECK(m.b_inverse() == 3);

    // swapped input gives the same normalized model
    const SltModel ms = SltModel::build_nonnormal(2, 5);
    CHECK(ms.a() == 3);

    CHECK_THROWS_AS(SltModel::build_nonnormal(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(SltModel::build_nonnormal(1, 2), std::invalid_argument);
}

TEST_CASE("index counts match curve counts") {
    for (long m = 3; m <= 30; ++m)
        for (long a = m / 2 + 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            for (long d = 1; d <= 3; ++d) {
                const SltModel mod = SltModel::build_class_t(a, d, m);
                REQUIRE(mod.index_lex().size() ==
                        static_cast<size_t>(mod.chart_main().chain.curve_count()));
            }
            const SltModel nn = SltModel::build_nonnormal(a, m);
            REQUIRE(nn.odd_indices().size() ==
                    static_cast<size_t>(nn.chart_main().chain.curve_count()));
            REQUIRE(nn.even_indices().size() ==
                    static_cast<size_t>(nn.chart_second().chain.curve_count()));
        }
}

TEST_CASE("json serialization is deterministic") {
    const SltModel m = SltModel::build_class_t(5, 1, 7);
    const std::string a = to_json(m).dump();
    const std::string b = to_json(SltModel::build_class_t(5, 1, 7)).dump();
    CHECK(a == b);
    CHECK(a.find("\"gorenstein_index\":\"7\"") != std::string::npos);
    const json j = to_json(SltModel::build_nonnormal(3, 5));
    CHECK(j.contains("chart_o"));
    CHECK(j.contains("chart_e"));
}
