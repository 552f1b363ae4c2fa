#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "chipfire/tree.hpp"

namespace chipfire {

/// Chip distribution over vertices. Vertices exist only as traversal
/// strings; absent keys hold no chips.
struct Configuration {
    GameParams params;
    std::map<TraversalString, std::set<chip_t>> holdings;
};

/// One firing: the k listed chips leave `vertex` and the i-th smallest of
/// them moves to the i-th leftmost child.
struct FireEvent {
    TraversalString vertex;
    std::vector<chip_t> chips;

    bool operator==(const FireEvent&) const = default;
};

/// Fire events in execution order. Valid strategies are layer-ordered and
/// fire every vertex of layers 1..n exactly k^(n-layer) times.
struct Strategy {
    std::vector<FireEvent> fires;
};

/// Per chip, the landing order it occupied on each layer 1..n+1.
struct LandingRecord {
    std::vector<std::vector<LandingOrder>> orders; // orders[c-1][layer-1]

    const std::vector<LandingOrder>& for_chip(chip_t c) const {
        return orders.at(static_cast<std::size_t>(c - 1));
    }
};

/// Terminal-layer chips read left to right; a permutation of 1..k^n.
using StablePermutation = std::vector<chip_t>;

struct RunResult {
    StablePermutation permutation;
    LandingRecord record;
};

Configuration initial_configuration(const GameParams& params);

/// Apply one fire event in place / by value.
void apply_fire(Configuration& config, const FireEvent& event);
Configuration fire(Configuration config, const FireEvent& event);

/// Eager whole-strategy validation: layer order, per-vertex fire counts,
/// arity and label ranges. Throws before any chip moves.
void validate_strategy(const GameParams& params, const Strategy& strategy);

/// Stable-sort an event list by layer and validate the result. Rejects
/// lists that cannot form a valid layered strategy.
Strategy normalize_layered(const GameParams& params, Strategy strategy);

/// Execute a validated strategy layer by layer, tracking landing orders.
RunResult run_strategy(const GameParams& params, const Strategy& strategy);

/// Deterministic default: every vertex repeatedly fires its k currently
/// smallest chips.
Strategy canonical_strategy(const GameParams& params);

/// Seeded random layered strategy (uniform chunking of shuffled chips at
/// every vertex). Same seed, same strategy.
Strategy random_strategy(const GameParams& params, std::uint64_t seed);

/// Canonical fire events for the subtree rooted at `vertex` holding
/// `chips`, appended to `layers` grouped by absolute depth.
void append_canonical_subtree(const GameParams& params, const TraversalString& vertex,
                              std::vector<chip_t> chips, std::vector<std::vector<FireEvent>>& layers);

/// [k^(n-1), k^(n-2), ..., 1]: fires per vertex on layers 1..n.
std::vector<chip_t> unlabeled_fire_counts(const GameParams& params);

/// All layer-(n+1) traversal strings, left to right.
std::vector<TraversalString> terminal_strings(const GameParams& params);

} // namespace chipfire
