#include "chipfire/witness.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace chipfire {

namespace {

struct SlotRef {
    int j;
    chip_t x;
};

// Place chip c at landing order (t, x) inside the subtree rooted at
// `prefix`. `chips` holds the subtree's actual labels sorted ascending;
// the construction works on their ranks 1..k^h with h = n - |prefix|.
void place_in_subtree(const GameParams& params, const TraversalString& prefix, const std::vector<chip_t>& chips,
                      const TraversalString& t, chip_t x, chip_t rank,
                      std::vector<std::vector<FireEvent>>& layers) {
    const int height = params.n - prefix.length();
    assert(t.length() >= 1 && t.length() <= height);
    const GameParams local(params.k, height);

    // Rank of the target chip at the first child on the way to (t, x).
    const int first = t.digits.front();
    chip_t z;
    if (t.length() == 1) {
        z = x;
    } else {
        const TraversalString rest(std::vector<int>(t.digits.begin() + 1, t.digits.end()));
        const GameParams child_game(params.k, height - 1);
        // Ranks that can still reach (rest, x) inside the child's subtree,
        // intersected with ranks whose slot at the first child admits the
        // target rank. Theorem coverage guarantees a nonempty window.
        chip_t lo = smallest_chip(rest, x, child_game);
        chip_t hi = largest_chip(rest, x, child_game);
        const TraversalString head(std::vector<int>{first});
        while (lo <= hi && largest_chip(head, lo, local) < rank) {
            ++lo;
        }
        if (lo > hi || smallest_chip(head, lo, local) > rank) {
            throw game_error(errc::infeasible_window,
                             "empty rank window while descending; this indicates an implementation bug");
        }
        z = lo;
    }

    Layer2Assignment assign = layer2_assignment(LandingOrder{TraversalString(std::vector<int>{first}), z}, rank, local);

    // Emit the root fires of this subtree with true labels.
    const chip_t per_child = local.pow_k(height - 1);
    for (chip_t row = 1; row <= per_child; ++row) {
        FireEvent event{prefix, {}};
        for (int j = 1; j <= params.k; ++j) {
            event.chips.push_back(chips[static_cast<std::size_t>(assign.chip_at(j, row) - 1)]);
        }
        layers[static_cast<std::size_t>(prefix.length())].push_back(std::move(event));
    }

    for (int j = 1; j <= params.k; ++j) {
        std::vector<chip_t> child_ranks = assign.child_chips(j);
        std::vector<chip_t> child_labels;
        child_labels.reserve(child_ranks.size());
        for (chip_t r : child_ranks) {
            child_labels.push_back(chips[static_cast<std::size_t>(r - 1)]);
        }
        if (j == first && t.length() > 1) {
            const TraversalString rest(std::vector<int>(t.digits.begin() + 1, t.digits.end()));
            place_in_subtree(params, prefix.child(j), child_labels, rest, x, z, layers);
        } else {
            append_canonical_subtree(params, prefix.child(j), std::move(child_labels), layers);
        }
    }
}

} // namespace

chip_t Layer2Assignment::chip_at(int j, chip_t x) const {
    const chip_t per_child = params.pow_k(params.n - 1);
    return chips.at(static_cast<std::size_t>((j - 1) * per_child + (x - 1)));
}

std::vector<chip_t> Layer2Assignment::child_chips(int j) const {
    const chip_t per_child = params.pow_k(params.n - 1);
    std::vector<chip_t> out(chips.begin() + static_cast<std::ptrdiff_t>((j - 1) * per_child),
                            chips.begin() + static_cast<std::ptrdiff_t>(j * per_child));
    std::sort(out.begin(), out.end());
    return out;
}

bool respects_domination(const Layer2Assignment& assign) {
    const GameParams& params = assign.params;
    const chip_t per_child = params.pow_k(params.n - 1);
    // Pointwise generators suffice: ranks within a child and equal ranks
    // across neighboring children.
    for (int j = 1; j <= params.k; ++j) {
        for (chip_t x = 1; x <= per_child; ++x) {
            if (x + 1 <= per_child && assign.chip_at(j, x) >= assign.chip_at(j, x + 1)) {
                return false;
            }
            if (j + 1 <= params.k && assign.chip_at(j, x) >= assign.chip_at(j + 1, x)) {
                return false;
            }
        }
    }
    return true;
}

Layer2Assignment layer2_assignment(const LandingOrder& target, chip_t c, const GameParams& params) {
    if (params.n < 1) {
        throw game_error(errc::invalid_params, "layer-2 assignments need n >= 1");
    }
    if (target.t.length() != 1) {
        throw game_error(errc::length_mismatch, "layer-2 target must have a length-1 traversal string");
    }
    validate_order(target, params);
    const chip_t total = params.total_chips();
    if (c < 1 || c > total) {
        throw game_error(errc::chip_out_of_range,
                         "chip " + std::to_string(c) + " outside [1, " + std::to_string(total) + "]");
    }
    const chip_t lo = smallest_chip(target.t, target.x, params);
    const chip_t hi = largest_chip(target.t, target.x, params);
    if (c < lo || c > hi) {
        throw game_error(errc::chip_out_of_range,
                         "chip " + std::to_string(c) + " outside the landing range [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "] of the target slot");
    }

    const int target_j = target.t.digits.front();
    const chip_t target_x = target.x;
    const chip_t per_child = params.pow_k(params.n - 1);

    std::vector<SlotRef> dominated;
    std::vector<SlotRef> dominating;
    std::vector<SlotRef> leftover;
    for (int j = 1; j <= params.k; ++j) {
        for (chip_t x = 1; x <= per_child; ++x) {
            if (j == target_j && x == target_x) {
                continue;
            }
            if (j <= target_j && x <= target_x) {
                dominated.push_back(SlotRef{j, x});
            } else if (j >= target_j && x >= target_x) {
                dominating.push_back(SlotRef{j, x});
            } else {
                leftover.push_back(SlotRef{j, x});
            }
        }
    }
    assert(static_cast<chip_t>(dominated.size()) == lo - 1);
    assert(static_cast<chip_t>(dominating.size()) == total - hi);

    Layer2Assignment assign{params, std::vector<chip_t>(static_cast<std::size_t>(total), 0)};
    auto place = [&assign, per_child](const SlotRef& slot, chip_t chip) {
        assign.chips[static_cast<std::size_t>((slot.j - 1) * per_child + (slot.x - 1))] = chip;
    };

    chip_t next = 1;
    for (const SlotRef& slot : dominated) {
        place(slot, next++);
    }
    next = hi + 1;
    for (const SlotRef& slot : dominating) {
        place(slot, next++);
    }
    place(SlotRef{target_j, target_x}, c);
    next = lo;
    for (const SlotRef& slot : leftover) {
        if (next == c) {
            ++next;
        }
        place(slot, next++);
    }
    assert(respects_domination(assign));
    return assign;
}

std::vector<FireEvent> assignment_to_fires(const Layer2Assignment& assign) {
    const GameParams& params = assign.params;
    const chip_t total = params.total_chips();
    std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
    for (chip_t chip : assign.chips) {
        if (chip < 1 || chip > total || seen[static_cast<std::size_t>(chip)]) {
            throw game_error(errc::domination_violated,
                             "assignment is not a bijection onto 1.." + std::to_string(total));
        }
        seen[static_cast<std::size_t>(chip)] = true;
    }
    if (!respects_domination(assign)) {
        throw game_error(errc::domination_violated, "assignment does not respect the domination order");
    }

    const chip_t per_child = params.pow_k(params.n - 1);
    std::vector<FireEvent> fires;
    fires.reserve(static_cast<std::size_t>(per_child));
    for (chip_t x = 1; x <= per_child; ++x) {
        FireEvent event{TraversalString{}, {}};
        for (int j = 1; j <= params.k; ++j) {
            event.chips.push_back(assign.chip_at(j, x));
        }
        fires.push_back(std::move(event));
    }
    return fires;
}

Strategy witness_strategy(const TraversalString& t, chip_t x, chip_t c, const GameParams& params) {
    if (t.empty()) {
        throw game_error(errc::length_mismatch, "witness targets start on layer 2");
    }
    validate_order(LandingOrder{t, x}, params);
    const chip_t lo = smallest_chip(t, x, params);
    const chip_t hi = largest_chip(t, x, params);
    if (c < lo || c > hi) {
        throw game_error(errc::chip_out_of_range,
                         "chip " + std::to_string(c) + " outside the landing range [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "] of (" + format_traversal(t, params) + ", " +
                             std::to_string(x) + ")");
    }

    std::vector<std::vector<FireEvent>> layers(static_cast<std::size_t>(std::max(params.n, 0)));
    std::vector<chip_t> chips(static_cast<std::size_t>(params.total_chips()));
    std::iota(chips.begin(), chips.end(), chip_t{1});
    place_in_subtree(params, TraversalString{}, chips, t, x, c, layers);

    Strategy strategy;
    for (auto& layer : layers) {
        for (auto& event : layer) {
            strategy.fires.push_back(std::move(event));
        }
    }
    return strategy;
}

} // namespace chipfire
