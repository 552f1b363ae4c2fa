#include "doctest.h"

#include <algorithm>
#include <map>

#include "chipfire/engine.hpp"

using namespace chipfire;

namespace {

TraversalString ts(std::vector<int> digits) { return TraversalString(std::move(digits)); }

std::set<chip_t> all_chips(const Configuration& config) {
    std::set<chip_t> chips;
    for (const auto& [vertex, held] : config.holdings) {
        chips.insert(held.begin(), held.end());
    }
    return chips;
}

// The figure-4 run: the root fires (1,2,7), (3,4,8), (5,6,9), then each
// child fires its three chips once.
Strategy figure4_strategy() {
    Strategy strategy;
    strategy.fires.push_back({TraversalString{}, {1, 2, 7}});
    strategy.fires.push_back({TraversalString{}, {3, 4, 8}});
    strategy.fires.push_back({TraversalString{}, {5, 6, 9}});
    strategy.fires.push_back({ts({1}), {1, 3, 5}});
    strategy.fires.push_back({ts({2}), {2, 4, 6}});
    strategy.fires.push_back({ts({3}), {7, 8, 9}});
    return strategy;
}

} // namespace

TEST_CASE("initial_configuration puts every chip on the root") {
    const Configuration c22 = initial_configuration(GameParams(2, 2));
    CHECK(c22.holdings.size() == 1);
    CHECK(c22.holdings.at(TraversalString{}) == std::set<chip_t>{1, 2, 3, 4});

    const Configuration c32 = initial_configuration(GameParams(3, 2));
    CHECK(c32.holdings.at(TraversalString{}).size() == 9);

    const Configuration c20 = initial_configuration(GameParams(2, 0));
    CHECK(c20.holdings.at(TraversalString{}) == std::set<chip_t>{1});
}

TEST_CASE("fire sends the i-th smallest chip to the i-th child") {
    const GameParams params(3, 2);
    Configuration config = initial_configuration(params);
    apply_fire(config, {TraversalString{}, {1, 2, 7}});
    CHECK(config.holdings.at(ts({1})) == std::set<chip_t>{1});
    CHECK(config.holdings.at(ts({2})) == std::set<chip_t>{2});
    CHECK(config.holdings.at(ts({3})) == std::set<chip_t>{7});
    CHECK(all_chips(config) == std::set<chip_t>{1, 2, 3, 4, 5, 6, 7, 8, 9});
}

TEST_CASE("fire dispatches sorted regardless of listing order") {
    const GameParams params(2, 2);
    Configuration config = initial_configuration(params);
    const Configuration after = fire(config, {TraversalString{}, {2, 1}});
    CHECK(after.holdings.at(ts({1})) == std::set<chip_t>{1});
    CHECK(after.holdings.at(ts({2})) == std::set<chip_t>{2});
    // value semantics: the input configuration is untouched
    CHECK(config.holdings.at(TraversalString{}).size() == 4);
}

TEST_CASE("fire validation") {
    const GameParams params(2, 2);
    Configuration config = initial_configuration(params);
    CHECK_THROWS_AS(apply_fire(config, {TraversalString{}, {1, 2, 3}}), game_error);       // arity
    CHECK_THROWS_AS(apply_fire(config, {TraversalString{}, {1, 1}}), game_error);          // duplicate
    CHECK_THROWS_AS(apply_fire(config, {ts({1}), {1, 2}}), game_error);                    // chips absent
    CHECK_THROWS_AS(apply_fire(config, {ts({1, 1}), {1, 2}}), game_error);                 // terminal layer
    CHECK_THROWS_AS(apply_fire(config, {TraversalString{}, {1, 9}}), game_error);          // label range

    try {
        apply_fire(config, {TraversalString{}, {1, 2, 3}});
    } catch (const game_error& e) {
        CHECK(e.code() == errc::wrong_arity);
    }
}

TEST_CASE("run_strategy reproduces the figure-4 permutation") {
    const RunResult result = run_strategy(GameParams(3, 2), figure4_strategy());
    CHECK(result.permutation == StablePermutation{1, 3, 5, 2, 4, 6, 7, 8, 9});
}

TEST_CASE("run_strategy on the single-fire game") {
    Strategy strategy;
    strategy.fires.push_back({TraversalString{}, {1, 2}});
    CHECK(run_strategy(GameParams(2, 1), strategy).permutation == StablePermutation{1, 2});
}

TEST_CASE("run_strategy handles the zero-depth game") {
    const RunResult result = run_strategy(GameParams(2, 0), Strategy{});
    CHECK(result.permutation == StablePermutation{1});
    CHECK(result.record.for_chip(1).size() == 1);
}

TEST_CASE("canonical strategy fires ascending chunks") {
    const Strategy s22 = canonical_strategy(GameParams(2, 2));
    const Strategy expected{{
        {TraversalString{}, {1, 2}},
        {TraversalString{}, {3, 4}},
        {ts({1}), {1, 3}},
        {ts({2}), {2, 4}},
    }};
    CHECK(s22.fires == expected.fires);
    CHECK(run_strategy(GameParams(2, 2), s22).permutation == StablePermutation{1, 3, 2, 4});

    const Strategy s21 = canonical_strategy(GameParams(2, 1));
    CHECK(s21.fires == std::vector<FireEvent>{{TraversalString{}, {1, 2}}});

    CHECK(run_strategy(GameParams(3, 2), canonical_strategy(GameParams(3, 2))).permutation ==
          StablePermutation{1, 4, 7, 2, 5, 8, 3, 6, 9});
}

TEST_CASE("strategies must be layered and complete") {
    const GameParams params(2, 2);
    Strategy out_of_order;
    out_of_order.fires.push_back({TraversalString{}, {1, 2}});
    out_of_order.fires.push_back({ts({1}), {1, 2}});
    out_of_order.fires.push_back({TraversalString{}, {3, 4}});
    CHECK_THROWS_AS(validate_strategy(params, out_of_order), game_error);
    try {
        validate_strategy(params, out_of_order);
    } catch (const game_error& e) {
        CHECK(e.code() == errc::not_layered);
    }

    Strategy incomplete = canonical_strategy(params);
    incomplete.fires.pop_back();
    CHECK_THROWS_AS(validate_strategy(params, incomplete), game_error);

    Strategy extra = canonical_strategy(params);
    extra.fires.push_back(extra.fires.back());
    CHECK_THROWS_AS(validate_strategy(params, extra), game_error);
}

TEST_CASE("normalize_layered sorts a reorderable event list") {
    const GameParams params(2, 2);
    Strategy shuffled;
    shuffled.fires.push_back({ts({1}), {1, 3}});
    shuffled.fires.push_back({TraversalString{}, {1, 2}});
    shuffled.fires.push_back({ts({2}), {2, 4}});
    shuffled.fires.push_back({TraversalString{}, {3, 4}});
    const Strategy normalized = normalize_layered(params, shuffled);
    CHECK(run_strategy(params, normalized).permutation == StablePermutation{1, 3, 2, 4});

    Strategy impossible;
    impossible.fires.push_back({ts({1}), {1, 3}});
    impossible.fires.push_back({ts({1}), {2, 4}});
    CHECK_THROWS_AS(normalize_layered(params, impossible), game_error);
}

TEST_CASE("unlabeled fire counts per layer") {
    CHECK(unlabeled_fire_counts(GameParams(3, 3)) == std::vector<chip_t>{9, 3, 1});
    CHECK(unlabeled_fire_counts(GameParams(2, 1)) == std::vector<chip_t>{1});
    CHECK(unlabeled_fire_counts(GameParams(2, 3)) == std::vector<chip_t>{4, 2, 1});
    CHECK(unlabeled_fire_counts(GameParams(2, 0)).empty());
}

TEST_CASE("fire counts of a full run match the unlabeled game") {
    const GameParams params(2, 3);
    const Strategy strategy = canonical_strategy(params);
    std::map<TraversalString, chip_t> counts;
    for (const FireEvent& event : strategy.fires) {
        counts[event.vertex] += 1;
    }
    const std::vector<chip_t> expected = unlabeled_fire_counts(params);
    for (const auto& [vertex, count] : counts) {
        CHECK(count == expected[static_cast<std::size_t>(vertex.length())]);
    }
    CHECK(counts.size() == 7); // 1 + 2 + 4 firing vertices
}

TEST_CASE("landing record tracks every chip layer by layer") {
    const GameParams params(3, 2);
    const RunResult result = run_strategy(params, figure4_strategy());
    for (chip_t c = 1; c <= 9; ++c) {
        const auto& orders = result.record.for_chip(c);
        REQUIRE(orders.size() == 3);
        CHECK(orders[0].t == TraversalString{});
        CHECK(orders[0].x == c); // root ranks equal labels
        for (std::size_t i = 1; i < orders.size(); ++i) {
            REQUIRE(orders[i].t.length() == static_cast<int>(i));
            // each layer extends the previous traversal string by one digit
            CHECK(std::equal(orders[i - 1].t.digits.begin(), orders[i - 1].t.digits.end(),
                             orders[i].t.digits.begin()));
        }
    }
    // terminal layer: ranks are all 1 and vertices are distinct
    std::set<TraversalString> leaves;
    for (chip_t c = 1; c <= 9; ++c) {
        const LandingOrder& last = result.record.for_chip(c).back();
        CHECK(last.x == 1);
        leaves.insert(last.t);
    }
    CHECK(leaves.size() == 9);
}

TEST_CASE("chip conservation through a full run") {
    const GameParams params(2, 3);
    Configuration config = initial_configuration(params);
    const std::set<chip_t> everything = all_chips(config);
    for (const FireEvent& event : canonical_strategy(params).fires) {
        apply_fire(config, event);
        CHECK(all_chips(config) == everything);
    }
}

TEST_CASE("random strategies are valid and seed-deterministic") {
    const GameParams params(2, 3);
    const Strategy a = random_strategy(params, 1234);
    const Strategy b = random_strategy(params, 1234);
    CHECK(a.fires == b.fires);
    CHECK_NOTHROW(validate_strategy(params, a));
    CHECK_NOTHROW(run_strategy(params, a));

    const Strategy c = random_strategy(params, 99);
    CHECK_NOTHROW(validate_strategy(params, c));
}
