#include "chipfire/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <string>

namespace chipfire {

namespace {

void require_full_scope(const EnumerationScope& scope) {
    const chip_t total = scope.params.total_chips();
    if (total > scope.max_total_chips) {
        throw game_error(errc::scope_exceeded,
                         "k^n = " + std::to_string(total) + " exceeds the enumeration guard " +
                             std::to_string(scope.max_total_chips));
    }
}

// Recursive anchor-and-companions enumeration: the smallest remaining chip
// picks its k-1 block mates, so each unordered partition is visited once.
void visit_partitions(std::vector<chip_t>& remaining, int k,
                      std::vector<std::vector<chip_t>>& blocks,
                      const std::function<void(const std::vector<std::vector<chip_t>>&)>& visit) {
    if (remaining.empty()) {
        visit(blocks);
        return;
    }
    const chip_t anchor = remaining.front();
    std::vector<chip_t> pool(remaining.begin() + 1, remaining.end());
    const int need = k - 1;
    std::vector<int> choose(static_cast<std::size_t>(need));
    std::iota(choose.begin(), choose.end(), 0);
    while (true) {
        std::vector<chip_t> block{anchor};
        std::vector<bool> used(pool.size(), false);
        for (int idx : choose) {
            block.push_back(pool[static_cast<std::size_t>(idx)]);
            used[static_cast<std::size_t>(idx)] = true;
        }
        std::vector<chip_t> rest;
        rest.reserve(pool.size() - static_cast<std::size_t>(need));
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (!used[i]) {
                rest.push_back(pool[i]);
            }
        }
        blocks.push_back(std::move(block));
        visit_partitions(rest, k, blocks, visit);
        blocks.pop_back();

        // next combination of indices into pool
        int pos = need - 1;
        while (pos >= 0 && choose[static_cast<std::size_t>(pos)] ==
                               static_cast<int>(pool.size()) - need + pos) {
            --pos;
        }
        if (pos < 0) {
            break;
        }
        ++choose[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < need; ++i) {
            choose[static_cast<std::size_t>(i)] = choose[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
}

// Child j of a firing vertex receives the j-th smallest chip of every
// block. Blocks arrive sorted because the enumeration inserts ascending.
std::vector<std::vector<chip_t>> dispatch_children(const std::vector<std::vector<chip_t>>& blocks, int k) {
    std::vector<std::vector<chip_t>> children(static_cast<std::size_t>(k));
    for (const auto& block : blocks) {
        for (int j = 0; j < k; ++j) {
            children[static_cast<std::size_t>(j)].push_back(block[static_cast<std::size_t>(j)]);
        }
    }
    for (auto& child : children) {
        std::sort(child.begin(), child.end());
    }
    return children;
}

// Reachable terminal readings of a height-h subtree over rank labels
// 1..k^h. Label-invariance of the firing rule lets every subtree of the
// same height share one table.
class reading_table {
public:
    explicit reading_table(int k) : k_(k) {}

    const std::set<std::vector<chip_t>>& readings(int height) {
        if (static_cast<std::size_t>(height) < memo_.size() && memo_[static_cast<std::size_t>(height)]) {
            return *memo_[static_cast<std::size_t>(height)];
        }
        if (memo_.size() <= static_cast<std::size_t>(height)) {
            memo_.resize(static_cast<std::size_t>(height) + 1);
        }
        std::set<std::vector<chip_t>> result;
        if (height == 0) {
            result.insert({1});
        } else {
            std::vector<chip_t> ranks(static_cast<std::size_t>(checked_pow(k_, height)));
            std::iota(ranks.begin(), ranks.end(), chip_t{1});

            std::set<std::vector<std::vector<chip_t>>> child_sets;
            std::vector<std::vector<chip_t>> blocks;
            visit_partitions(ranks, k_, blocks,
                             [&](const std::vector<std::vector<chip_t>>& bs) { child_sets.insert(dispatch_children(bs, k_)); });

            const std::set<std::vector<chip_t>>& sub = readings(height - 1);
            for (const auto& children : child_sets) {
                // cross product of the children's readings, mapped through
                // each child's sorted chip set
                std::vector<chip_t> prefix;
                cross_product(children, sub, 0, prefix, result);
            }
        }
        memo_[static_cast<std::size_t>(height)] = std::move(result);
        return *memo_[static_cast<std::size_t>(height)];
    }

private:
    void cross_product(const std::vector<std::vector<chip_t>>& children, const std::set<std::vector<chip_t>>& sub,
                       std::size_t child, std::vector<chip_t>& prefix, std::set<std::vector<chip_t>>& result) {
        if (child == children.size()) {
            result.insert(prefix);
            return;
        }
        const std::vector<chip_t>& labels = children[child];
        for (const std::vector<chip_t>& reading : sub) {
            const std::size_t mark = prefix.size();
            for (chip_t rank : reading) {
                prefix.push_back(labels[static_cast<std::size_t>(rank - 1)]);
            }
            cross_product(children, sub, child + 1, prefix, result);
            prefix.resize(mark);
        }
    }

    int k_;
    std::vector<std::optional<std::set<std::vector<chip_t>>>> memo_;
};

} // namespace

void for_each_k_partition(const std::vector<chip_t>& chips, int k,
                          const std::function<void(const std::vector<std::vector<chip_t>>&)>& visit) {
    if (k < 1) {
        throw game_error(errc::invalid_params, "block size must be positive");
    }
    if (chips.size() % static_cast<std::size_t>(k) != 0) {
        throw game_error(errc::invalid_params,
                         std::to_string(chips.size()) + " chips cannot split into blocks of " + std::to_string(k));
    }
    std::vector<chip_t> sorted(chips);
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::vector<chip_t>> blocks;
    visit_partitions(sorted, k, blocks, visit);
}

std::vector<std::vector<std::vector<chip_t>>> set_partitions_into_k_blocks(const std::vector<chip_t>& chips,
                                                                           int k) {
    std::vector<std::vector<std::vector<chip_t>>> out;
    for_each_k_partition(chips, k, [&out](const std::vector<std::vector<chip_t>>& blocks) { out.push_back(blocks); });
    return out;
}

chip_t count_k_partitions(chip_t size, int k) {
    if (k < 1 || size % k != 0) {
        throw game_error(errc::invalid_params, "size must be a positive multiple of k");
    }
    // size! / ((k!)^(size/k) * (size/k)!) computed incrementally: the
    // smallest remaining element picks k-1 companions at every step.
    chip_t result = 1;
    for (chip_t left = size; left > 0; left -= k) {
        // C(left-1, k-1)
        chip_t combinations = 1;
        for (chip_t i = 1; i <= k - 1; ++i) {
            combinations = combinations * (left - i) / i;
        }
        result *= combinations;
    }
    return result;
}

std::set<StablePermutation> enumerate_stable(const EnumerationScope& scope) {
    require_full_scope(scope);
    reading_table table(scope.params.k);
    return table.readings(scope.params.n);
}

std::set<chip_t> reachable_chips(const LandingOrder& o, const EnumerationScope& scope) {
    require_full_scope(scope);
    validate_order(o, scope.params);

    std::vector<chip_t> all(static_cast<std::size_t>(scope.params.total_chips()));
    std::iota(all.begin(), all.end(), chip_t{1});
    std::set<std::vector<chip_t>> sets{all};
    for (int digit : o.t.digits) {
        std::set<std::vector<chip_t>> next;
        for (const std::vector<chip_t>& chips : sets) {
            for_each_k_partition(chips, scope.params.k, [&](const std::vector<std::vector<chip_t>>& blocks) {
                next.insert(dispatch_children(blocks, scope.params.k)[static_cast<std::size_t>(digit - 1)]);
            });
        }
        sets = std::move(next);
    }

    std::set<chip_t> out;
    for (const std::vector<chip_t>& chips : sets) {
        out.insert(chips[static_cast<std::size_t>(o.x - 1)]);
    }
    return out;
}

bool is_reachable(const StablePermutation& perm, const EnumerationScope& scope) {
    const chip_t total = scope.params.total_chips();
    if (total > scope.max_reachability_chips) {
        throw game_error(errc::scope_exceeded,
                         "k^n = " + std::to_string(total) + " exceeds the reachability guard " +
                             std::to_string(scope.max_reachability_chips));
    }
    if (static_cast<chip_t>(perm.size()) != total) {
        throw game_error(errc::not_a_permutation,
                         "expected " + std::to_string(total) + " labels, got " + std::to_string(perm.size()));
    }
    std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
    for (chip_t c : perm) {
        if (c < 1 || c > total || seen[static_cast<std::size_t>(c)]) {
            throw game_error(errc::not_a_permutation, "labels are not a permutation of 1.." + std::to_string(total));
        }
        seen[static_cast<std::size_t>(c)] = true;
    }

    // Cheap prune first: every slot's chip must lie inside the slot's
    // landing range.
    const int k = scope.params.k;
    std::vector<TraversalString> leaves = terminal_strings(scope.params);
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        chip_t lo = 1;
        chip_t hi = 1;
        for (int d : leaves[i].digits) {
            lo *= d;
            hi *= k + 1 - d;
        }
        hi = total + 1 - hi;
        if (perm[i] < lo || perm[i] > hi) {
            return false;
        }
    }

    // The target reading forces the chip set entering every subtree, so
    // reachability reduces to a dispatch check per internal vertex: the
    // children's forced sets must be sorted-pointwise increasing, which is
    // exactly when some block sequence at the vertex delivers them.
    struct Checker {
        const StablePermutation& perm;
        int k;

        bool check(std::size_t begin, std::size_t size) const {
            if (size <= 1) {
                return true;
            }
            const std::size_t child_size = size / static_cast<std::size_t>(k);
            std::vector<std::vector<chip_t>> children;
            children.reserve(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j) {
                std::vector<chip_t> chips(perm.begin() + static_cast<std::ptrdiff_t>(begin + child_size * static_cast<std::size_t>(j)),
                                          perm.begin() + static_cast<std::ptrdiff_t>(begin + child_size * static_cast<std::size_t>(j + 1)));
                std::sort(chips.begin(), chips.end());
                children.push_back(std::move(chips));
            }
            for (int j = 0; j + 1 < k; ++j) {
                for (std::size_t e = 0; e < child_size; ++e) {
                    if (children[static_cast<std::size_t>(j)][e] >= children[static_cast<std::size_t>(j + 1)][e]) {
                        return false;
                    }
                }
            }
            for (int j = 0; j < k; ++j) {
                if (!check(begin + child_size * static_cast<std::size_t>(j), child_size)) {
                    return false;
                }
            }
            return true;
        }
    };
    return Checker{perm, k}.check(0, perm.size());
}

} // namespace chipfire
