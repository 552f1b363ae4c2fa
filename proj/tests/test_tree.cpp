#include "doctest.h"

#include <algorithm>
#include <set>

#include "chipfire/tree.hpp"

using namespace chipfire;

namespace {

TraversalString ts(std::vector<int> digits) { return TraversalString(std::move(digits)); }

// all strings of the given length, left to right
std::vector<TraversalString> strings_of_length(int length, int k) {
    std::vector<TraversalString> out{TraversalString{}};
    for (int i = 0; i < length; ++i) {
        std::vector<TraversalString> next;
        for (const TraversalString& t : out) {
            for (int d = 1; d <= k; ++d) {
                next.push_back(t.child(d));
            }
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("game params validation") {
    CHECK_THROWS_AS(GameParams(1, 3), game_error);
    CHECK_THROWS_AS(GameParams(0, 0), game_error);
    CHECK_THROWS_AS(GameParams(2, -1), game_error);
    CHECK_THROWS_AS(GameParams(2, 63), game_error); // 2^63 overflows
    CHECK(GameParams(2, 62).total_chips() == chip_t{1} << 62);
    CHECK(GameParams(3, 0).total_chips() == 1);
}

TEST_CASE("parse_traversal accepts digits within [1, k]") {
    const GameParams params(3, 3);
    CHECK(parse_traversal("12", params) == ts({1, 2}));
    CHECK(parse_traversal("", GameParams(2, 2)) == TraversalString{});

    CHECK_THROWS_WITH_AS(parse_traversal("14", params), doctest::Contains("digit 4"), game_error);
    CHECK_THROWS_AS(parse_traversal("1212", params), game_error); // longer than n
    CHECK_THROWS_AS(parse_traversal("1a", params), game_error);
    CHECK_THROWS_AS(parse_traversal("102", params), game_error); // digit 0
}

TEST_CASE("parse_traversal uses dotted digits for k >= 10") {
    const GameParams params(12, 3);
    CHECK(parse_traversal("10.2.1", params) == ts({10, 2, 1}));
    CHECK(parse_traversal("7", params) == ts({7}));
    CHECK(format_traversal(ts({10, 2, 1}), params) == "10.2.1");
    CHECK_THROWS_AS(parse_traversal("13.1", params), game_error);
    CHECK_THROWS_AS(parse_traversal("10.", params), game_error);
}

TEST_CASE("vertex_index matches the worked examples") {
    CHECK(vertex_index(ts({1, 2}), GameParams(3, 3)) == 2);
    CHECK(vertex_index(ts({3, 3, 1}), GameParams(3, 3)) == 25);
    CHECK(vertex_index(ts({1, 1, 3}), GameParams(3, 3)) == 3);
    CHECK(vertex_index(TraversalString{}, GameParams(2, 2)) == 1);
}

TEST_CASE("landing_order_index matches the worked examples") {
    CHECK(landing_order_index({ts({3, 1}), 2}, GameParams(3, 3)) == 20);
    CHECK(landing_order_index({TraversalString{}, 5}, GameParams(2, 3)) == 5);
    CHECK(landing_order_index({ts({2, 2}), 1}, GameParams(2, 3)) == 7);

    CHECK_THROWS_AS(landing_order_index({ts({2, 2}), 3}, GameParams(2, 3)), game_error);
    CHECK_THROWS_AS(landing_order_index({ts({2, 2}), 0}, GameParams(2, 3)), game_error);
}

TEST_CASE("landing order indices enumerate each layer left to right") {
    for (const GameParams params : {GameParams(2, 3), GameParams(3, 2), GameParams(4, 2)}) {
        const chip_t total = params.total_chips();
        for (int len = 0; len <= params.n; ++len) {
            const chip_t per_vertex = params.pow_k(params.n - len);
            chip_t expected = 1;
            for (const TraversalString& t : strings_of_length(len, params.k)) {
                for (chip_t x = 1; x <= per_vertex; ++x) {
                    CHECK(landing_order_index({t, x}, params) == expected);
                    ++expected;
                }
            }
            CHECK(expected == total + 1);
        }
    }
}

TEST_CASE("chips_per_vertex follows k^(n-layer+1)") {
    CHECK(chips_per_vertex(1, GameParams(3, 2)) == 9);
    CHECK(chips_per_vertex(2, GameParams(3, 3)) == 9);
    CHECK(chips_per_vertex(4, GameParams(2, 3)) == 1);
    CHECK_THROWS_AS(chips_per_vertex(0, GameParams(2, 3)), game_error);
    CHECK_THROWS_AS(chips_per_vertex(5, GameParams(2, 3)), game_error);
}

TEST_CASE("reflect mirrors strings and ranks") {
    CHECK(reflect({ts({3, 1}), 2}, GameParams(3, 3)) == LandingOrder{ts({1, 3}), 2});
    CHECK(reflect({ts({1, 1, 1}), 1}, GameParams(3, 3)) == LandingOrder{ts({3, 3, 3}), 1});
    CHECK(reflect({ts({1, 2}), 1}, GameParams(2, 2)) == LandingOrder{ts({2, 1}), 1});
}

TEST_CASE("reflect is an involution and mirrors vertex indices") {
    for (const GameParams params : {GameParams(2, 3), GameParams(3, 2)}) {
        for (int len = 0; len <= params.n; ++len) {
            const chip_t per_vertex = params.pow_k(params.n - len);
            for (const TraversalString& t : strings_of_length(len, params.k)) {
                CHECK(vertex_index(reflect_string(t, params), params) ==
                      params.pow_k(len) + 1 - vertex_index(t, params));
                for (chip_t x = 1; x <= per_vertex; ++x) {
                    const LandingOrder o{t, x};
                    CHECK(reflect(reflect(o, params), params) == o);
                }
            }
        }
    }
}

TEST_CASE("dominates is the pointwise partial order") {
    CHECK(dominates({ts({1, 2, 1}), 1}, {ts({2, 2, 1}), 1}));
    CHECK_FALSE(dominates({ts({1, 2}), 1}, {ts({2, 1}), 1}));
    CHECK_FALSE(dominates({ts({2, 1}), 1}, {ts({1, 2}), 1}));
    CHECK(dominates({ts({1}), 1}, {ts({1}), 1}));
    CHECK_FALSE(dominates({ts({1}), 2}, {ts({1}), 1}));
    CHECK_THROWS_AS(dominates({ts({1}), 1}, {ts({1, 1}), 1}), game_error);
}

TEST_CASE("the number of dominated orders equals x times the digit product") {
    for (const GameParams params : {GameParams(2, 3), GameParams(3, 2)}) {
        for (int len = 1; len <= params.n; ++len) {
            const chip_t per_vertex = params.pow_k(params.n - len);
            const std::vector<TraversalString> layer = strings_of_length(len, params.k);
            for (const TraversalString& t : layer) {
                chip_t product = 1;
                for (int d : t.digits) {
                    product *= d;
                }
                for (chip_t x = 1; x <= per_vertex; ++x) {
                    chip_t dominated = 0;
                    for (const TraversalString& other : layer) {
                        for (chip_t ox = 1; ox <= per_vertex; ++ox) {
                            if (dominates({other, ox}, {t, x})) {
                                ++dominated;
                            }
                        }
                    }
                    CHECK(dominated == x * product);
                }
            }
        }
    }
}
