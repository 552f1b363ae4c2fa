#pragma once

#include "chipfire/engine.hpp"
#include "chipfire/formulas.hpp"

namespace chipfire {

/// Total assignment of the k^n chips to the layer-2 slots (child j,
/// rank x), stored left to right: slot (j, x) lives at
/// (j-1)*k^(n-1) + (x-1).
struct Layer2Assignment {
    GameParams params;
    std::vector<chip_t> chips;

    chip_t chip_at(int j, chip_t x) const;

    /// Chips destined for child j, sorted ascending.
    std::vector<chip_t> child_chips(int j) const;
};

/// True iff every dominated slot holds a strictly smaller chip.
bool respects_domination(const Layer2Assignment& assign);

/// Domination-respecting assignment with chip c at the layer-2 target:
/// chips below the slot's range fill the dominated slots, chips above it
/// fill the dominating slots, the rest fill leftover slots left to right.
Layer2Assignment layer2_assignment(const LandingOrder& target, chip_t c, const GameParams& params);

/// The k^(n-1) root fire events realizing a domination-respecting
/// assignment: the x-th event fires {assign(j, x) : j = 1..k}.
std::vector<FireEvent> assignment_to_fires(const Layer2Assignment& assign);

/// Complete layered strategy placing chip c at landing order (t, x),
/// for any 1 <= |t| <= n and c within [a(t,x), b(t,x)]. Descends one
/// layer at a time, picking the smallest feasible rank at each child and
/// filling untouched subtrees with the canonical ascending rule.
Strategy witness_strategy(const TraversalString& t, chip_t x, chip_t c, const GameParams& params);

} // namespace chipfire
