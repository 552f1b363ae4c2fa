#include "chipfire/formulas.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

namespace chipfire {

namespace {

chip_t digit_product(const TraversalString& t) {
    chip_t product = 1;
    for (int d : t.digits) {
        product *= d;
    }
    return product;
}

chip_t mirrored_digit_product(const TraversalString& t, const GameParams& params) {
    chip_t product = 1;
    for (int d : t.digits) {
        product *= params.k + 1 - d;
    }
    return product;
}

// floor(log_k value) by repeated division; value >= 1.
int floor_log_k(chip_t value, int k) {
    int exponent = 0;
    while (value >= k) {
        value /= k;
        ++exponent;
    }
    return exponent;
}

void require_chip(chip_t c, const GameParams& params) {
    const chip_t total = params.total_chips();
    if (c < 1 || c > total) {
        throw game_error(errc::chip_out_of_range,
                         "chip " + std::to_string(c) + " outside [1, " + std::to_string(total) + "]");
    }
}

void require_terminal(const TraversalString& t, const GameParams& params) {
    validate_string(t, params);
    if (t.length() != params.n) {
        throw game_error(errc::length_mismatch,
                         "expected a terminal traversal string of length " + std::to_string(params.n));
    }
}

TraversalString repeated(int digit, int count) {
    return TraversalString(std::vector<int>(static_cast<std::size_t>(count), digit));
}

TraversalString concat(std::initializer_list<TraversalString> parts) {
    TraversalString out;
    for (const TraversalString& part : parts) {
        out.digits.insert(out.digits.end(), part.digits.begin(), part.digits.end());
    }
    return out;
}

void push_unique(std::vector<TraversalString>& list, TraversalString t) {
    if (std::find(list.begin(), list.end(), t) == list.end()) {
        list.push_back(std::move(t));
    }
}

void push_unique(std::vector<chip_t>& list, chip_t c) {
    if (std::find(list.begin(), list.end(), c) == list.end()) {
        list.push_back(c);
    }
}

} // namespace

chip_t smallest_chip(const TraversalString& t, chip_t x, const GameParams& params) {
    validate_order(LandingOrder{t, x}, params);
    return x * digit_product(t);
}

chip_t largest_chip(const TraversalString& t, chip_t x, const GameParams& params) {
    validate_order(LandingOrder{t, x}, params);
    const chip_t per_vertex = params.pow_k(params.n - t.length());
    return params.total_chips() + 1 - (per_vertex + 1 - x) * mirrored_digit_product(t, params);
}

LandingRange landing_range(const TraversalString& t, const GameParams& params) {
    require_terminal(t, params);
    return LandingRange{t, smallest_chip(t, 1, params), largest_chip(t, 1, params)};
}

bool chip_lands_at(chip_t c, const TraversalString& t, const GameParams& params) {
    require_chip(c, params);
    const LandingRange range = landing_range(t, params);
    return range.lo <= c && c <= range.hi;
}

RangeExtremes extreme_range_lengths(const GameParams& params) {
    if (params.n < 1) {
        throw game_error(errc::invalid_params, "range extremes need n >= 1");
    }
    RangeExtremes out;
    if (params.n == 1) {
        // Both leaves are trivial: no nontrivial vertex exists to witness
        // an extreme, and every range has length 1.
        return out;
    }
    out.has_nontrivial = true;
    out.shortest_length = params.pow_k(params.n - 1);
    push_unique(out.shortest_witnesses, concat({repeated(1, params.n - 1), repeated(2, 1)}));
    push_unique(out.shortest_witnesses, concat({repeated(params.k - 1, 1), repeated(params.k, params.n - 1)}));

    const int half_down = params.n / 2;
    const int half_up = params.n - half_down;
    out.longest_length = params.total_chips() + 2 - params.pow_k(half_down) - params.pow_k(half_up);
    push_unique(out.longest_witnesses, concat({repeated(1, half_down), repeated(params.k, half_up)}));
    push_unique(out.longest_witnesses, concat({repeated(1, half_up), repeated(params.k, half_down)}));
    return out;
}

SpreadProfile spread_profile(chip_t c, const GameParams& params) {
    if (params.n < 1) {
        throw game_error(errc::invalid_params, "spread profiles need n >= 1");
    }
    require_chip(c, params);
    const chip_t total = params.total_chips();
    if (c == 1 || c == total) {
        throw game_error(errc::trivial_chip,
                         "chip " + std::to_string(c) + " is trivial; its spread is 1 by definition");
    }

    SpreadProfile profile;
    profile.c = c;
    profile.m = floor_log_k(c, params.k);
    profile.y = static_cast<int>(c / params.pow_k(profile.m));
    const chip_t mirror = total + 1 - c;
    profile.j = floor_log_k(mirror, params.k);
    profile.x = params.k + 1 - static_cast<int>(mirror / params.pow_k(profile.j));

    profile.leftmost = concat({repeated(1, profile.j), repeated(profile.x, 1), repeated(params.k, params.n - 1 - profile.j)});
    profile.rightmost = concat({repeated(params.k, profile.m), repeated(profile.y, 1), repeated(1, params.n - 1 - profile.m)});
    profile.leftmost_index = vertex_index(profile.leftmost, params);
    profile.rightmost_index = vertex_index(profile.rightmost, params);
    profile.spread = profile.rightmost_index - profile.leftmost_index + 1;

    assert(profile.spread == 2 + (profile.y - 1) * params.pow_k(params.n - profile.m - 1) + total -
                                 params.pow_k(params.n - profile.m) -
                                 profile.x * params.pow_k(params.n - 1 - profile.j));
    return profile;
}

chip_t chip_spread(chip_t c, const GameParams& params) {
    require_chip(c, params);
    if (c == 1 || c == params.total_chips()) {
        return 1;
    }
    return spread_profile(c, params).spread;
}

SpreadExtremes extreme_spreads(const GameParams& params) {
    if (params.n < 2) {
        throw game_error(errc::invalid_params, "all spreads are 1 when n < 2");
    }
    const chip_t total = params.total_chips();
    const chip_t half = params.pow_k(params.n - 1);

    SpreadExtremes out;
    out.smallest = 1;
    out.smallest_chips = {1, total};
    out.second_smallest = half;
    if (params.k == 2) {
        push_unique(out.second_smallest_chips, 2);
        push_unique(out.second_smallest_chips, 3);
        push_unique(out.second_smallest_chips, total - 2);
        push_unique(out.second_smallest_chips, total - 1);
        out.largest = total - 2;
        out.largest_chips = {half, half + 1};
    } else {
        out.second_smallest_chips = {2, total - 1};
        out.largest = total - params.k;
        out.largest_chips = {half, half + 1, total - half, total - half + 1};
    }
    std::sort(out.second_smallest_chips.begin(), out.second_smallest_chips.end());
    return out;
}

std::vector<TraversalString> digit_multisets(const GameParams& params) {
    std::vector<TraversalString> out;
    TraversalString t(std::vector<int>(static_cast<std::size_t>(params.n), 1));
    while (true) {
        out.push_back(t);
        int pos = params.n - 1;
        while (pos >= 0 && t.digits[static_cast<std::size_t>(pos)] == params.k) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        const int next = t.digits[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < params.n; ++i) {
            t.digits[static_cast<std::size_t>(i)] = next;
        }
    }
    return out;
}

std::vector<chip_t> group_boundaries(const GameParams& params) {
    if (params.n < 1) {
        throw game_error(errc::invalid_params, "group boundaries need n >= 1");
    }
    std::set<chip_t> values;
    for (const TraversalString& t : digit_multisets(params)) {
        const LandingRange range = landing_range(t, params);
        values.insert(range.lo);
        values.insert(range.hi);
    }
    return std::vector<chip_t>(values.begin(), values.end());
}

GroupPartition group_partition(const GameParams& params) {
    GroupPartition out;
    out.boundaries = group_boundaries(params);

    const std::vector<TraversalString> multisets = digit_multisets(params);
    std::vector<LandingRange> ranges;
    ranges.reserve(multisets.size());
    for (const TraversalString& t : multisets) {
        ranges.push_back(landing_range(t, params));
    }
    auto landing_set = [&ranges](chip_t c) {
        std::vector<bool> members;
        members.reserve(ranges.size());
        for (const LandingRange& range : ranges) {
            members.push_back(range.lo <= c && c <= range.hi);
        }
        return members;
    };

    const chip_t total = params.total_chips();
    chip_t start = 1;
    std::vector<bool> current = landing_set(1);
    for (chip_t c = 2; c <= total; ++c) {
        std::vector<bool> next = landing_set(c);
        if (next != current) {
            out.groups.push_back(ChipGroup{start, c - 1});
            start = c;
            current = std::move(next);
        }
    }
    out.groups.push_back(ChipGroup{start, total});

    std::vector<chip_t> starts;
    starts.reserve(out.groups.size());
    for (const ChipGroup& group : out.groups) {
        starts.push_back(group.lo);
    }
    out.boundaries_match_group_starts = (starts == out.boundaries);
    return out;
}

} // namespace chipfire
