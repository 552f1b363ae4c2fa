#include "chipfire/engine.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <string>

namespace chipfire {

namespace {

std::string describe(const TraversalString& t) {
    if (t.empty()) {
        return "root";
    }
    const bool dotted = std::any_of(t.digits.begin(), t.digits.end(), [](int d) { return d > 9; });
    std::string out = "v_";
    for (std::size_t i = 0; i < t.digits.size(); ++i) {
        if (dotted && i > 0) {
            out += '.';
        }
        out += std::to_string(t.digits[i]);
    }
    return out;
}

std::vector<chip_t> sorted_distinct_chips(const FireEvent& event, const GameParams& params) {
    if (static_cast<int>(event.chips.size()) != params.k) {
        throw game_error(errc::wrong_arity,
                         describe(event.vertex) + " fires " + std::to_string(event.chips.size()) +
                             " chips, expected k = " + std::to_string(params.k));
    }
    std::vector<chip_t> sorted(event.chips);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw game_error(errc::wrong_arity, describe(event.vertex) + " fires a duplicated chip label");
    }
    const chip_t total = params.total_chips();
    if (sorted.front() < 1 || sorted.back() > total) {
        throw game_error(errc::chip_out_of_range,
                         describe(event.vertex) + " fires a label outside [1, " + std::to_string(total) + "]");
    }
    return sorted;
}

void check_fireable_vertex(const TraversalString& vertex, const GameParams& params) {
    for (int d : vertex.digits) {
        if (d < 1 || d > params.k) {
            throw game_error(errc::invalid_digit,
                             "fire vertex digit " + std::to_string(d) + " outside [1, " + std::to_string(params.k) + "]");
        }
    }
    if (vertex.length() >= params.n) {
        throw game_error(errc::terminal_vertex,
                         describe(vertex) + " is on layer " + std::to_string(vertex.layer()) +
                             "; vertices on the terminal layer never fire");
    }
}

std::vector<FireEvent> flatten(std::vector<std::vector<FireEvent>>& layers) {
    std::vector<FireEvent> fires;
    for (auto& layer : layers) {
        for (auto& event : layer) {
            fires.push_back(std::move(event));
        }
    }
    return fires;
}

} // namespace

Configuration initial_configuration(const GameParams& params) {
    Configuration config{params, {}};
    std::set<chip_t>& root = config.holdings[TraversalString{}];
    const chip_t total = params.total_chips();
    for (chip_t c = 1; c <= total; ++c) {
        root.insert(root.end(), c);
    }
    return config;
}

void apply_fire(Configuration& config, const FireEvent& event) {
    const GameParams& params = config.params;
    check_fireable_vertex(event.vertex, params);
    const std::vector<chip_t> sorted = sorted_distinct_chips(event, params);

    auto slot = config.holdings.find(event.vertex);
    for (chip_t c : sorted) {
        if (slot == config.holdings.end() || !slot->second.contains(c)) {
            throw game_error(errc::missing_chip,
                             "chip " + std::to_string(c) + " is not at " + describe(event.vertex));
        }
    }
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        slot->second.erase(sorted[i]);
        config.holdings[event.vertex.child(static_cast<int>(i) + 1)].insert(sorted[i]);
    }
    if (slot->second.empty()) {
        config.holdings.erase(event.vertex);
    }
}

Configuration fire(Configuration config, const FireEvent& event) {
    apply_fire(config, event);
    return config;
}

void validate_strategy(const GameParams& params, const Strategy& strategy) {
    int current_depth = 0;
    std::map<TraversalString, chip_t> counts;
    for (const FireEvent& event : strategy.fires) {
        check_fireable_vertex(event.vertex, params);
        sorted_distinct_chips(event, params);
        const int depth = event.vertex.length();
        if (depth < current_depth) {
            throw game_error(errc::not_layered,
                             describe(event.vertex) + " fires after a deeper layer already started");
        }
        current_depth = depth;
        counts[event.vertex] += 1;
    }

    // Every vertex of layers 1..n fires exactly k^(n - layer) times.
    chip_t expected_vertices = 0;
    for (int depth = 0; depth < params.n; ++depth) {
        expected_vertices += params.pow_k(depth);
    }
    if (static_cast<chip_t>(counts.size()) != expected_vertices) {
        throw game_error(errc::incomplete_strategy,
                         "strategy fires " + std::to_string(counts.size()) + " distinct vertices, expected " +
                             std::to_string(expected_vertices));
    }
    for (const auto& [vertex, count] : counts) {
        const chip_t required = params.pow_k(params.n - 1 - vertex.length());
        if (count != required) {
            throw game_error(errc::incomplete_strategy,
                             describe(vertex) + " fires " + std::to_string(count) + " times, expected " +
                                 std::to_string(required));
        }
    }
}

Strategy normalize_layered(const GameParams& params, Strategy strategy) {
    std::stable_sort(strategy.fires.begin(), strategy.fires.end(),
                     [](const FireEvent& a, const FireEvent& b) { return a.vertex.length() < b.vertex.length(); });
    validate_strategy(params, strategy);
    return strategy;
}

RunResult run_strategy(const GameParams& params, const Strategy& strategy) {
    validate_strategy(params, strategy);

    const chip_t total = params.total_chips();
    LandingRecord record;
    record.orders.assign(static_cast<std::size_t>(total), {});

    Configuration config = initial_configuration(params);
    auto record_layer = [&](int depth) {
        for (const auto& [vertex, chips] : config.holdings) {
            if (vertex.length() != depth) {
                continue;
            }
            chip_t rank = 1;
            for (chip_t c : chips) {
                record.orders[static_cast<std::size_t>(c - 1)].push_back(LandingOrder{vertex, rank});
                ++rank;
            }
        }
    };
    record_layer(0);

    std::size_t next = 0;
    for (int depth = 0; depth < params.n; ++depth) {
        while (next < strategy.fires.size() && strategy.fires[next].vertex.length() == depth) {
            apply_fire(config, strategy.fires[next]);
            ++next;
        }
        record_layer(depth + 1);
    }
    assert(next == strategy.fires.size());

    StablePermutation permutation;
    permutation.reserve(static_cast<std::size_t>(total));
    for (const auto& [vertex, chips] : config.holdings) {
        assert(vertex.length() == params.n && chips.size() == 1);
        permutation.push_back(*chips.begin());
    }
    assert(static_cast<chip_t>(permutation.size()) == total);
    return RunResult{std::move(permutation), std::move(record)};
}

// Chunk the chips at one vertex into fire events and recurse: child i of
// each chunk receives the chunk's i-th smallest chip.
void append_canonical_subtree(const GameParams& params, const TraversalString& vertex, std::vector<chip_t> chips,
                              std::vector<std::vector<FireEvent>>& layers) {
    const int depth = vertex.length();
    if (depth >= params.n) {
        return;
    }
    std::sort(chips.begin(), chips.end());
    std::vector<std::vector<chip_t>> child_chips(static_cast<std::size_t>(params.k));
    for (std::size_t start = 0; start < chips.size(); start += static_cast<std::size_t>(params.k)) {
        FireEvent event{vertex, {}};
        event.chips.assign(chips.begin() + static_cast<std::ptrdiff_t>(start),
                           chips.begin() + static_cast<std::ptrdiff_t>(start) + params.k);
        for (int j = 0; j < params.k; ++j) {
            child_chips[static_cast<std::size_t>(j)].push_back(event.chips[static_cast<std::size_t>(j)]);
        }
        layers[static_cast<std::size_t>(depth)].push_back(std::move(event));
    }
    for (int j = 1; j <= params.k; ++j) {
        append_canonical_subtree(params, vertex.child(j), std::move(child_chips[static_cast<std::size_t>(j - 1)]),
                                 layers);
    }
}

Strategy canonical_strategy(const GameParams& params) {
    std::vector<std::vector<FireEvent>> layers(static_cast<std::size_t>(std::max(params.n, 0)));
    std::vector<chip_t> chips(static_cast<std::size_t>(params.total_chips()));
    std::iota(chips.begin(), chips.end(), chip_t{1});
    append_canonical_subtree(params, TraversalString{}, std::move(chips), layers);
    return Strategy{flatten(layers)};
}

Strategy random_strategy(const GameParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    // Hand-rolled Fisher-Yates so the strategy depends only on the seed,
    // not on the standard library's shuffle implementation.
    auto shuffle = [&rng](std::vector<chip_t>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(rng() % i);
            std::swap(values[i - 1], values[j]);
        }
    };

    std::vector<std::vector<FireEvent>> layers(static_cast<std::size_t>(std::max(params.n, 0)));
    // depth-major walk; each vertex fires random k-sets of its chips
    struct Pending {
        TraversalString vertex;
        std::vector<chip_t> chips;
    };
    std::vector<chip_t> all(static_cast<std::size_t>(params.total_chips()));
    std::iota(all.begin(), all.end(), chip_t{1});
    std::vector<Pending> current{{TraversalString{}, std::move(all)}};

    for (int depth = 0; depth < params.n; ++depth) {
        std::vector<Pending> next;
        for (Pending& item : current) {
            shuffle(item.chips);
            std::vector<std::vector<chip_t>> child_chips(static_cast<std::size_t>(params.k));
            for (std::size_t start = 0; start < item.chips.size(); start += static_cast<std::size_t>(params.k)) {
                FireEvent event{item.vertex, {}};
                event.chips.assign(item.chips.begin() + static_cast<std::ptrdiff_t>(start),
                                   item.chips.begin() + static_cast<std::ptrdiff_t>(start) + params.k);
                std::vector<chip_t> sorted(event.chips);
                std::sort(sorted.begin(), sorted.end());
                for (int j = 0; j < params.k; ++j) {
                    child_chips[static_cast<std::size_t>(j)].push_back(sorted[static_cast<std::size_t>(j)]);
                }
                layers[static_cast<std::size_t>(depth)].push_back(std::move(event));
            }
            for (int j = 1; j <= params.k; ++j) {
                next.push_back(Pending{item.vertex.child(j), std::move(child_chips[static_cast<std::size_t>(j - 1)])});
            }
        }
        current = std::move(next);
    }
    return Strategy{flatten(layers)};
}

std::vector<chip_t> unlabeled_fire_counts(const GameParams& params) {
    std::vector<chip_t> counts;
    counts.reserve(static_cast<std::size_t>(params.n));
    for (int layer = 1; layer <= params.n; ++layer) {
        counts.push_back(params.pow_k(params.n - layer));
    }
    return counts;
}

std::vector<TraversalString> terminal_strings(const GameParams& params) {
    std::vector<TraversalString> out;
    out.reserve(static_cast<std::size_t>(params.total_chips()));
    TraversalString t(std::vector<int>(static_cast<std::size_t>(params.n), 1));
    while (true) {
        out.push_back(t);
        int pos = params.n - 1;
        while (pos >= 0 && t.digits[static_cast<std::size_t>(pos)] == params.k) {
            t.digits[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) {
            break;
        }
        t.digits[static_cast<std::size_t>(pos)] += 1;
    }
    return out;
}

} // namespace chipfire
