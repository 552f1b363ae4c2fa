#include "chipfire/strategy_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace chipfire {

std::string strategy_to_json(const GameParams& params, const Strategy& strategy) {
    nlohmann::json doc;
    doc["k"] = params.k;
    doc["n"] = params.n;
    nlohmann::json fires = nlohmann::json::array();
    for (const FireEvent& event : strategy.fires) {
        fires.push_back({{"vertex", format_traversal(event.vertex, params)}, {"chips", event.chips}});
    }
    doc["fires"] = std::move(fires);
    return doc.dump(2) + "\n";
}

StrategyFile strategy_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw game_error(errc::parse_error, std::string("strategy file is not valid JSON: ") + e.what());
    }

    if (!doc.is_object() || !doc.contains("k") || !doc.contains("n") || !doc.contains("fires")) {
        throw game_error(errc::parse_error, "strategy file must be an object with keys k, n, fires");
    }
    if (!doc["k"].is_number_integer() || !doc["n"].is_number_integer()) {
        throw game_error(errc::parse_error, "strategy file: k and n must be integers");
    }
    GameParams params(doc["k"].get<int>(), doc["n"].get<int>());

    if (!doc["fires"].is_array()) {
        throw game_error(errc::parse_error, "strategy file: fires must be an array");
    }
    Strategy strategy;
    std::size_t index = 0;
    for (const auto& entry : doc["fires"]) {
        const std::string where = "fires[" + std::to_string(index) + "]";
        if (!entry.is_object() || !entry.contains("vertex") || !entry.contains("chips")) {
            throw game_error(errc::parse_error, where + ": expected {\"vertex\", \"chips\"}");
        }
        if (!entry["vertex"].is_string() || !entry["chips"].is_array()) {
            throw game_error(errc::parse_error, where + ": vertex must be a string and chips an array");
        }
        FireEvent event;
        try {
            event.vertex = parse_traversal(entry["vertex"].get<std::string>(), params);
        } catch (const game_error& e) {
            throw game_error(e.code(), where + ": " + e.what());
        }
        for (const auto& chip : entry["chips"]) {
            if (!chip.is_number_integer()) {
                throw game_error(errc::parse_error, where + ": chips must be integers");
            }
            event.chips.push_back(chip.get<chip_t>());
        }
        strategy.fires.push_back(std::move(event));
        ++index;
    }
    return StrategyFile{params, std::move(strategy)};
}

void save_strategy(const std::string& path, const GameParams& params, const Strategy& strategy) {
    std::ofstream out(path);
    if (!out) {
        throw game_error(errc::parse_error, "cannot open " + path + " for writing");
    }
    out << strategy_to_json(params, strategy);
}

StrategyFile load_strategy(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw game_error(errc::parse_error, "cannot open " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return strategy_from_json(buffer.str());
}

} // namespace chipfire
