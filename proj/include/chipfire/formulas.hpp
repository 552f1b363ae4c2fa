#pragma once

#include <vector>

#include "chipfire/tree.hpp"

namespace chipfire {

/// Smallest chip that can occupy landing order (t, x): x * prod(t_j).
chip_t smallest_chip(const TraversalString& t, chip_t x, const GameParams& params);

/// Largest chip that can occupy (t, x):
/// k^n + 1 - (k^(n-i) + 1 - x) * prod(k+1-t_j).
chip_t largest_chip(const TraversalString& t, chip_t x, const GameParams& params);

/// Closed interval of chips that can finish at terminal vertex v_t.
struct LandingRange {
    TraversalString t;
    chip_t lo = 0;
    chip_t hi = 0;

    chip_t length() const { return hi - lo + 1; }
};

LandingRange landing_range(const TraversalString& t, const GameParams& params);

bool chip_lands_at(chip_t c, const TraversalString& t, const GameParams& params);

/// Extremes over nontrivial terminal vertices. The witnesses are the digit
/// multisets guaranteed to achieve each extreme (others may tie), given as
/// their sorted-digit representatives. For n = 1 every leaf is trivial:
/// has_nontrivial is false and the witness lists are empty.
struct RangeExtremes {
    bool has_nontrivial = false;
    chip_t shortest_length = 1;
    std::vector<TraversalString> shortest_witnesses;
    chip_t longest_length = 1;
    std::vector<TraversalString> longest_witnesses;
};

RangeExtremes extreme_range_lengths(const GameParams& params);

/// Where a nontrivial chip can land: m, y locate the rightmost reachable
/// leaf (k..k y 1..1 with m leading k's), j, x the leftmost (1..1 x k..k
/// with j leading 1's).
struct SpreadProfile {
    chip_t c = 0;
    int m = 0;
    int j = 0;
    int y = 1;
    int x = 2;
    TraversalString leftmost;
    TraversalString rightmost;
    chip_t leftmost_index = 0;
    chip_t rightmost_index = 0;
    chip_t spread = 0;
};

/// Requires a nontrivial chip (throws errc::trivial_chip for 1 and k^n).
SpreadProfile spread_profile(chip_t c, const GameParams& params);

/// Total spread of any chip; 1 for the trivial chips.
chip_t chip_spread(chip_t c, const GameParams& params);

struct SpreadExtremes {
    chip_t smallest = 1;
    std::vector<chip_t> smallest_chips;
    chip_t second_smallest = 0;
    std::vector<chip_t> second_smallest_chips;
    chip_t largest = 0;
    std::vector<chip_t> largest_chips;
};

/// Closed-form extreme spreads with their exact chip sets (n >= 2).
SpreadExtremes extreme_spreads(const GameParams& params);

/// Sorted union of a(t,1) and b(t,1) over all terminal vertices.
std::vector<chip_t> group_boundaries(const GameParams& params);

struct ChipGroup {
    chip_t lo = 0;
    chip_t hi = 0;

    bool operator==(const ChipGroup&) const = default;
};

/// Maximal runs of consecutive chips sharing an identical set of reachable
/// terminal vertices, computed by direct landing-set comparison. The
/// diagnostic reports whether the group starts coincide with the boundary
/// union U (observed in some games, not guaranteed).
struct GroupPartition {
    std::vector<chip_t> boundaries;
    std::vector<ChipGroup> groups;
    bool boundaries_match_group_starts = false;
};

GroupPartition group_partition(const GameParams& params);

/// Non-decreasing digit strings of length n (terminal strings up to digit
/// permutation), lexicographic.
std::vector<TraversalString> digit_multisets(const GameParams& params);

} // namespace chipfire
