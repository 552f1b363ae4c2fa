#pragma once

#include <string>

#include "chipfire/engine.hpp"

namespace chipfire {

struct StrategyFile {
    GameParams params;
    Strategy strategy;
};

/// JSON document: {"k": int, "n": int, "fires": [{"vertex": "...",
/// "chips": [...]}, ...]}, fires in execution order. Serialization is
/// deterministic, so write -> read -> write round-trips byte-identically.
std::string strategy_to_json(const GameParams& params, const Strategy& strategy);
StrategyFile strategy_from_json(const std::string& text);

void save_strategy(const std::string& path, const GameParams& params, const Strategy& strategy);
StrategyFile load_strategy(const std::string& path);

} // namespace chipfire
