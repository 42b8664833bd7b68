#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pcov/errors.hpp"
#include "pcov/oracle.hpp"

using namespace pcov;
using namespace pcov::testing;

TEST_CASE("pvc oracle: path center beats endpoints, ties go lexicographic") {
    // P3, unit weights, one group needing both edges: {1} is optimal.
    PvcInstance p3 = make_pvc(3, {1, 1, 1}, {{0, 1, 1, 0}, {1, 2, 1, 0}}, {2});
    auto sol = oracle::brute_force_pvc(p3);
    REQUIRE(sol.has_value());
    CHECK(sol->selected == std::vector<int>{1});
    CHECK(sol->total_weight == Rational(1));

    // Triangle, unit everything, threshold 2: every singleton works; the
    // lexicographically smallest wins.
    PvcInstance tri = make_pvc(3, {1, 1, 1}, {{0, 1, 1, 0}, {0, 2, 1, 0}, {1, 2, 1, 0}}, {2});
    auto tsol = oracle::brute_force_pvc(tri);
    REQUIRE(tsol.has_value());
    CHECK(tsol->selected == std::vector<int>{0});
}

TEST_CASE("pvc oracle: empty set is valid when thresholds are zero") {
    PvcInstance inst = make_pvc(2, {1, 1}, {{0, 1, 1, 0}}, {0});
    auto sol = oracle::brute_force_pvc(inst);
    REQUIRE(sol.has_value());
    CHECK(sol->selected.empty());
    CHECK(sol->total_weight == Rational(0));
}

TEST_CASE("pvc oracle: infeasible and too-large inputs") {
    PvcInstance inst = make_pvc(2, {1, 1}, {{0, 1, 1, 0}}, {2});
    CHECK_FALSE(oracle::brute_force_pvc(inst).has_value());

    PvcInstance big = make_pvc(21, {1, 1}, {{0, 1, 1, 0}}, {1});
    big.vertex_weights.assign(21, Rational(1));
    CHECK_THROWS_AS(oracle::brute_force_pvc(big), TooLarge);
}

TEST_CASE("pec oracle: worked-example optimum and requirement-zero edge case") {
    auto sol = oracle::brute_force_pec(worked_example_pec());
    REQUIRE(sol.has_value());
    CHECK(sol->total_cost == Rational(5));
    CHECK(sol->selected == std::vector<int>{1, 5}); // (g1,b2) and (b2,r1)

    PecInstance zero = worked_example_pec();
    zero.requirements = {0, 0, 0};
    auto empty = oracle::brute_force_pec(zero);
    REQUIRE(empty.has_value());
    CHECK(empty->selected.empty());
    CHECK(empty->total_cost == Rational(0));
}

TEST_CASE("pec oracle rejects too many edges") {
    PecInstance big;
    big.graph.n = 8;
    for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v)
            big.graph.edges.push_back({u, v, Rational(1)});
    big.vertex_groups.assign(8, 0);
    big.requirements = {1};
    CHECK_THROWS_AS(oracle::brute_force_pec(big), TooLarge);
}

TEST_CASE("wbm validation bounds the requirements") {
    WbmInstance wbm;
    wbm.graph = WeightedGraph{2, {{0, 1, Rational(1)}}};
    wbm.vertex_groups = {0, 0};
    wbm.requirements = {3};
    CHECK_THROWS_AS(validate_wbm(wbm), ValidationError);
    wbm.requirements = {-1};
    CHECK_THROWS_AS(validate_wbm(wbm), ValidationError);
    wbm.requirements = {2};
    CHECK_NOTHROW(validate_wbm(wbm));
}

TEST_CASE("wbm oracle picks the cheapest qualifying matching") {
    // Path 0-1-2-3, costs 4,1,4; groups {0},{1},{2},{3}; need vertices 0 and 3
    // matched: forces both outer edges despite the cheap middle one.
    WbmInstance wbm;
    wbm.graph = WeightedGraph{4, {{0, 1, Rational(4)}, {1, 2, Rational(1)}, {2, 3, Rational(4)}}};
    wbm.vertex_groups = {0, 1, 2, 3};
    wbm.requirements = {1, 0, 0, 1};
    auto sol = oracle::brute_force_wbm(wbm);
    REQUIRE(sol.has_value());
    CHECK(sol->weight == Rational(8));
    CHECK(sol->edges == std::vector<int>{0, 2});

    wbm.requirements = {0, 0, 0, 0};
    auto empty = oracle::brute_force_wbm(wbm);
    REQUIRE(empty.has_value());
    CHECK(empty->weight == Rational(0));
    CHECK(empty->edges.empty());

    // Unreachable requirement: vertex 0 isolated.
    WbmInstance lonely;
    lonely.graph = WeightedGraph{3, {{1, 2, Rational(1)}}};
    lonely.vertex_groups = {0, 1, 1};
    lonely.requirements = {1, 0};
    CHECK_FALSE(oracle::brute_force_wbm(lonely).has_value());
}
