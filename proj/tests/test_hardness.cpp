#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pcov/errors.hpp"
#include "pcov/hardness.hpp"
#include "pcov/io.hpp"

using namespace pcov;

namespace {

KnapsackInstance random_knapsack(uint64_t seed, int max_items) {
    io::SplitMix64 rng(seed);
    KnapsackInstance k;
    const int n = 1 + static_cast<int>(rng.next() % max_items);
    long long total_profit = 0, total_cost = 0;
    for (int i = 0; i < n; ++i) {
        long long p = static_cast<long long>(rng.next() % 10);
        long long c = static_cast<long long>(rng.next() % 10);
        k.items.push_back({Rational(p), Rational(c)});
        total_profit += p;
        total_cost += c;
    }
    k.profit_target = Rational(static_cast<long long>(rng.next() % (total_profit + 2)));
    k.budget = Rational(static_cast<long long>(rng.next() % (total_cost + 2)));
    return k;
}

} // namespace

TEST_CASE("reduction structure: one blue-red edge per item, thresholds {P, 0}") {
    KnapsackInstance k;
    k.items = {{Rational(4), Rational(2)}, {Rational(1), Rational(3)}};
    k.profit_target = Rational(4);
    k.budget = Rational(2);
    WppecInstance w = knapsack_to_wppec(k);
    REQUIRE(w.graph.n == 4);
    REQUIRE(w.graph.edges.size() == 2);
    CHECK(w.graph.edges[0].u == 0);
    CHECK(w.graph.edges[0].v == 2);
    CHECK(w.graph.edges[0].weight == Rational(2));
    CHECK(w.vertex_profits == std::vector<Rational>{Rational(4), Rational(1), Rational(0), Rational(0)});
    CHECK(w.vertex_groups == std::vector<int>{0, 0, 1, 1});
    CHECK(w.thresholds == std::vector<Rational>{Rational(4), Rational(0)});
    CHECK(w.budget == Rational(2));

    // Item 0 alone fits: decision is yes on both sides.
    CHECK(decide_knapsack_bruteforce(k));
    CHECK(decide_wppec_bruteforce(w));
}

TEST_CASE("corner cases") {
    KnapsackInstance zero_target;
    zero_target.items = {{Rational(5), Rational(5)}};
    zero_target.profit_target = Rational(0);
    zero_target.budget = Rational(0);
    CHECK(decide_knapsack_bruteforce(zero_target)); // empty selection suffices
    CHECK(decide_wppec_bruteforce(knapsack_to_wppec(zero_target)));

    KnapsackInstance zero_budget;
    zero_budget.items = {{Rational(5), Rational(5)}};
    zero_budget.profit_target = Rational(1);
    zero_budget.budget = Rational(0);
    CHECK_FALSE(decide_knapsack_bruteforce(zero_budget));
    CHECK_FALSE(decide_wppec_bruteforce(knapsack_to_wppec(zero_budget)));

    KnapsackInstance zero_profits;
    zero_profits.items = {{Rational(0), Rational(1)}, {Rational(0), Rational(2)}};
    zero_profits.profit_target = Rational(1);
    zero_profits.budget = Rational(10);
    CHECK_FALSE(decide_knapsack_bruteforce(zero_profits));
    CHECK_FALSE(decide_wppec_bruteforce(knapsack_to_wppec(zero_profits)));

    zero_profits.profit_target = Rational(0);
    CHECK(decide_knapsack_bruteforce(zero_profits));
    CHECK(decide_wppec_bruteforce(knapsack_to_wppec(zero_profits)));
}

TEST_CASE("fractional data survives the reduction") {
    KnapsackInstance k;
    k.items = {{Rational(3, 2), Rational(1, 3)}, {Rational(5, 2), Rational(2, 3)}};
    k.profit_target = Rational(4);
    k.budget = Rational(1);
    CHECK(decide_knapsack_bruteforce(k));
    CHECK(decide_wppec_bruteforce(knapsack_to_wppec(k)));
    k.budget = Rational(99, 100);
    CHECK_FALSE(decide_knapsack_bruteforce(k));
    CHECK_FALSE(decide_wppec_bruteforce(knapsack_to_wppec(k)));
}

TEST_CASE("decision equivalence on 500 random instances") {
    for (uint64_t seed = 1; seed <= 500; ++seed) {
        KnapsackInstance k = random_knapsack(seed, 10);
        CHECK(decide_knapsack_bruteforce(k) == decide_wppec_bruteforce(knapsack_to_wppec(k)));
    }
}

TEST_CASE("validation rejects negative data") {
    KnapsackInstance k;
    k.items = {{Rational(-1), Rational(1)}};
    k.profit_target = Rational(0);
    k.budget = Rational(1);
    CHECK_THROWS_AS(validate_knapsack(k), ValidationError);
}
