#pragma once

#include <string>
#include <vector>

#include "chipfire/formulas.hpp"

namespace chipfire {

enum class OutputFormat { csv, json };

struct OutputDocument {
    OutputFormat format = OutputFormat::csv;
    std::string body;
};

struct RangesRow {
    TraversalString t;
    chip_t a = 0;
    chip_t b = 0;
    chip_t length = 0;
};

/// One row per terminal traversal string (or per digit multiset), sorted
/// lexicographically by string.
std::vector<RangesRow> ranges_table(const GameParams& params, bool by_multiset);

/// Rendered table with columns t,a,b,length. CSV and JSON renderings of
/// the same query carry identical values.
OutputDocument render_ranges_table(const GameParams& params, bool by_multiset, OutputFormat format);

} // namespace chipfire
