#include "chipfire/report.hpp"

#include "chipfire/engine.hpp"

#include "json.hpp"

namespace chipfire {

std::vector<RangesRow> ranges_table(const GameParams& params, bool by_multiset) {
    if (params.n < 1) {
        throw game_error(errc::invalid_params, "ranges tables need n >= 1");
    }
    const std::vector<TraversalString> strings =
        by_multiset ? digit_multisets(params) : terminal_strings(params);
    std::vector<RangesRow> rows;
    rows.reserve(strings.size());
    for (const TraversalString& t : strings) {
        const LandingRange range = landing_range(t, params);
        rows.push_back(RangesRow{t, range.lo, range.hi, range.length()});
    }
    return rows;
}

OutputDocument render_ranges_table(const GameParams& params, bool by_multiset, OutputFormat format) {
    const std::vector<RangesRow> rows = ranges_table(params, by_multiset);
    OutputDocument doc;
    doc.format = format;
    if (format == OutputFormat::csv) {
        std::string body = "t,a,b,length\n";
        for (const RangesRow& row : rows) {
            body += format_traversal(row.t, params);
            body += ',' + std::to_string(row.a);
            body += ',' + std::to_string(row.b);
            body += ',' + std::to_string(row.length);
            body += '\n';
        }
        doc.body = std::move(body);
    } else {
        nlohmann::json out = nlohmann::json::array();
        for (const RangesRow& row : rows) {
            out.push_back({{"t", format_traversal(row.t, params)},
                           {"a", row.a},
                           {"b", row.b},
                           {"length", row.length}});
        }
        doc.body = out.dump(2) + "\n";
    }
    return doc;
}

} // namespace chipfire
