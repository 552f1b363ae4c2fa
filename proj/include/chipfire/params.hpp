#pragma once

#include <cstdint>

#include "chipfire/errors.hpp"

namespace chipfire {

/// Chip labels and layer-wide indices. All arithmetic is exact; games are
/// rejected at construction if k^n does not fit in 63 bits.
using chip_t = std::int64_t;

/// base^exp with overflow detection (throws errc::invalid_params).
chip_t checked_pow(chip_t base, int exp);

/// Branching factor k and depth exponent n: the game places k^n labeled
/// chips on the root of the infinite directed k-ary tree.
struct GameParams {
    int k;
    int n;

    GameParams(int k_, int n_);

    chip_t total_chips() const { return checked_pow(k, n); }
    chip_t pow_k(int e) const { return checked_pow(k, e); }
    int terminal_layer() const { return n + 1; }

    bool operator==(const GameParams&) const = default;
};

} // namespace chipfire
