#pragma once

#include <functional>
#include <set>
#include <vector>

#include "chipfire/engine.hpp"

namespace chipfire {

/// Guard rails for exhaustive search. Full enumeration is bounded by
/// max_total_chips; is_reachable tolerates more because the target forces
/// every subtree's chip set.
struct EnumerationScope {
    GameParams params;
    chip_t max_total_chips = 9;
    chip_t max_reachability_chips = 16;
};

/// Visit every partition of `chips` into unordered blocks of exactly k
/// elements, once each. |chips| must be divisible by k.
void for_each_k_partition(const std::vector<chip_t>& chips, int k,
                          const std::function<void(const std::vector<std::vector<chip_t>>&)>& visit);

/// Collecting variant of for_each_k_partition.
std::vector<std::vector<std::vector<chip_t>>>
set_partitions_into_k_blocks(const std::vector<chip_t>& chips, int k);

/// m! / ((k!)^(m/k) * (m/k)!) for m = size.
chip_t count_k_partitions(chip_t size, int k);

/// Exact set of stable permutations reachable by some strategy.
std::set<StablePermutation> enumerate_stable(const EnumerationScope& scope);

/// Exact set of chips that can occupy landing order o over all strategies.
std::set<chip_t> reachable_chips(const LandingOrder& o, const EnumerationScope& scope);

/// Decide whether some strategy produces the given terminal permutation.
/// The target forces the chip set entering every subtree, so the search
/// collapses to a per-vertex dispatchability check.
bool is_reachable(const StablePermutation& perm, const EnumerationScope& scope);

} // namespace chipfire
