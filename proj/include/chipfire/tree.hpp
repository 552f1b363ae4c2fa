#pragma once

#include <compare>
#include <string>
#include <vector>

#include "chipfire/params.hpp"

namespace chipfire {

/// Vertex address: the sequence of 1-based child choices walked from the
/// root. The empty string is the root (layer 1); a string of length i
/// addresses a vertex on layer i+1.
struct TraversalString {
    std::vector<int> digits;

    TraversalString() = default;
    explicit TraversalString(std::vector<int> d) : digits(std::move(d)) {}

    int length() const { return static_cast<int>(digits.size()); }
    bool empty() const { return digits.empty(); }
    int layer() const { return length() + 1; }

    TraversalString child(int digit) const {
        TraversalString c(*this);
        c.digits.push_back(digit);
        return c;
    }

    auto operator<=>(const TraversalString&) const = default;
};

/// A chip slot on a layer: vertex plus the chip's value-rank among the
/// chips at that vertex once the layer's inflow is complete.
struct LandingOrder {
    TraversalString t;
    chip_t x = 1;

    auto operator<=>(const LandingOrder&) const = default;
};

/// Textual form: concatenated digits for k <= 9 ("12"), dot-separated
/// decimal digits for larger k ("10.2.1"). "" is the root.
TraversalString parse_traversal(const std::string& text, const GameParams& params);
std::string format_traversal(const TraversalString& t, const GameParams& params);

void validate_string(const TraversalString& t, const GameParams& params);
void validate_order(const LandingOrder& o, const GameParams& params);

/// 1-based left-to-right position of v_t among the vertices of its layer.
chip_t vertex_index(const TraversalString& t, const GameParams& params);

/// 1-based left-to-right position of (t, x) among all k^n chip slots of
/// layer |t|+1.
chip_t landing_order_index(const LandingOrder& o, const GameParams& params);

/// Chips arriving at each vertex of the given layer (layers 1..n+1).
chip_t chips_per_vertex(int layer, const GameParams& params);

/// Mirror image across the vertical axis through the root.
TraversalString reflect_string(const TraversalString& t, const GameParams& params);
LandingOrder reflect(const LandingOrder& o, const GameParams& params);

/// True iff lo is pointwise dominated by hi (digits and rank). Requires
/// equal string lengths.
bool dominates(const LandingOrder& lo, const LandingOrder& hi);

} // namespace chipfire
