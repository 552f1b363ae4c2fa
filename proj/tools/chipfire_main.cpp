#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "chipfire/engine.hpp"
#include "chipfire/formulas.hpp"
#include "chipfire/oracle.hpp"
#include "chipfire/report.hpp"
#include "chipfire/strategy_io.hpp"
#include "chipfire/witness.hpp"

namespace {

using namespace chipfire;

std::string join(const std::vector<chip_t>& values, char sep = ',') {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += std::to_string(values[i]);
    }
    return out;
}

std::vector<chip_t> parse_chip_list(const std::string& text) {
    std::vector<chip_t> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoll(token, &used));
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) {
                ++used;
            }
            if (used != token.size()) {
                throw std::invalid_argument(token);
            }
        } catch (const std::exception&) {
            throw game_error(errc::parse_error, "'" + token + "' is not an integer label");
        }
    }
    if (out.empty()) {
        throw game_error(errc::parse_error, "empty permutation");
    }
    return out;
}

void print_record(const GameParams& params, const LandingRecord& record) {
    std::cout << "chip,layer,t,x\n";
    for (chip_t c = 1; c <= params.total_chips(); ++c) {
        const auto& orders = record.for_chip(c);
        for (std::size_t i = 0; i < orders.size(); ++i) {
            std::cout << c << ',' << (i + 1) << ',' << format_traversal(orders[i].t, params) << ','
                      << orders[i].x << '\n';
        }
    }
}

void print_spread_row(const GameParams& params, chip_t c) {
    const chip_t total = params.total_chips();
    if (c == 1 || c == total) {
        const TraversalString vertex(std::vector<int>(static_cast<std::size_t>(params.n), c == 1 ? 1 : params.k));
        const chip_t index = vertex_index(vertex, params);
        std::cout << c << ",,,,," << format_traversal(vertex, params) << ','
                  << format_traversal(vertex, params) << ',' << index << ',' << index << ",1\n";
        return;
    }
    const SpreadProfile profile = spread_profile(c, params);
    std::cout << c << ',' << profile.m << ',' << profile.j << ',' << profile.y << ',' << profile.x << ','
              << format_traversal(profile.leftmost, params) << ',' << format_traversal(profile.rightmost, params)
              << ',' << profile.leftmost_index << ',' << profile.rightmost_index << ',' << profile.spread << '\n';
}

int run(int argc, char** argv) {
    CLI::App app{"labeled chip-firing on the infinite directed k-ary tree"};
    app.require_subcommand(1);

    int k = 2;
    int n = 1;
    auto add_params = [&k, &n](CLI::App* cmd) {
        cmd->add_option("--k", k, "branching factor (>= 2)")->required();
        cmd->add_option("--n", n, "depth exponent; the game starts with k^n chips")->required();
    };

    // ranges
    bool by_multiset = false;
    std::string format = "csv";
    auto* ranges_cmd = app.add_subcommand("ranges", "landing range of every terminal vertex");
    add_params(ranges_cmd);
    ranges_cmd->add_flag("--by-multiset", by_multiset, "one row per digit multiset");
    ranges_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    ranges_cmd->callback([&] {
        const OutputFormat fmt = format == "json" ? OutputFormat::json : OutputFormat::csv;
        std::cout << render_ranges_table(GameParams(k, n), by_multiset, fmt).body;
    });

    // index
    std::string t_text;
    chip_t x = 1;
    auto* index_cmd = app.add_subcommand("index", "left-to-right index of a landing order");
    add_params(index_cmd);
    index_cmd->add_option("--t", t_text, "traversal string ('' = root)");
    index_cmd->add_option("--x", x, "within-vertex rank")->required();
    index_cmd->callback([&] {
        const GameParams params(k, n);
        std::cout << landing_order_index(LandingOrder{parse_traversal(t_text, params), x}, params) << '\n';
    });

    // simulate
    bool canonical = false;
    bool with_record = false;
    std::string strategy_path;
    auto* sim_cmd = app.add_subcommand("simulate", "run a strategy to its stable configuration");
    add_params(sim_cmd);
    auto* canonical_flag = sim_cmd->add_flag("--canonical", canonical, "use the ascending canonical strategy");
    auto* strategy_opt = sim_cmd->add_option("--strategy", strategy_path, "strategy JSON file");
    canonical_flag->excludes(strategy_opt);
    sim_cmd->add_flag("--record", with_record, "also print the per-chip landing record");
    sim_cmd->callback([&] {
        const GameParams params(k, n);
        Strategy strategy;
        if (canonical) {
            strategy = canonical_strategy(params);
        } else if (!strategy_path.empty()) {
            StrategyFile file = load_strategy(strategy_path);
            if (file.params != params) {
                throw game_error(errc::invalid_params,
                                 strategy_path + " is a (k=" + std::to_string(file.params.k) + ", n=" +
                                     std::to_string(file.params.n) + ") strategy, not (k=" + std::to_string(k) +
                                     ", n=" + std::to_string(n) + ")");
            }
            strategy = std::move(file.strategy);
        } else {
            throw CLI::ValidationError("simulate", "one of --canonical / --strategy is required");
        }
        const RunResult result = run_strategy(params, strategy);
        std::cout << join(result.permutation) << '\n';
        if (with_record) {
            print_record(params, result.record);
        }
    });

    // witness
    chip_t chip = 1;
    std::string out_path;
    bool verify = false;
    auto* witness_cmd = app.add_subcommand("witness", "strategy placing a chosen chip at a landing order");
    add_params(witness_cmd);
    witness_cmd->add_option("--t", t_text, "target traversal string")->required();
    witness_cmd->add_option("--x", x, "target rank (default 1)");
    witness_cmd->add_option("--c", chip, "chip label to place")->required();
    witness_cmd->add_option("--out", out_path, "write the strategy JSON here instead of stdout");
    witness_cmd->add_flag("--verify", verify, "run the strategy and assert the placement");
    witness_cmd->callback([&] {
        const GameParams params(k, n);
        const TraversalString target = parse_traversal(t_text, params);
        const Strategy strategy = witness_strategy(target, x, chip, params);
        if (out_path.empty()) {
            std::cout << strategy_to_json(params, strategy);
        } else {
            save_strategy(out_path, params, strategy);
        }
        if (verify) {
            const RunResult result = run_strategy(params, strategy);
            const LandingOrder landed = result.record.for_chip(chip).at(static_cast<std::size_t>(target.length()));
            if (landed.t != target || landed.x != x) {
                throw game_error(errc::infeasible_window,
                                 "verification failed: chip " + std::to_string(chip) + " landed at (" +
                                     format_traversal(landed.t, params) + ", " + std::to_string(landed.x) + ")");
            }
            std::cerr << "verified: chip " << chip << " lands at (" << t_text << ", " << x << ")\n";
        }
    });

    // spread
    auto* spread_cmd = app.add_subcommand("spread", "spread profile of one chip");
    add_params(spread_cmd);
    spread_cmd->add_option("--c", chip, "chip label")->required();
    spread_cmd->callback([&] {
        const GameParams params(k, n);
        std::cout << "c,m,j,y,x,leftmost,rightmost,leftmost_index,rightmost_index,spread\n";
        print_spread_row(params, chip);
    });

    // spreads
    auto* spreads_cmd = app.add_subcommand("spreads", "spread profiles of every chip, with extremes");
    add_params(spreads_cmd);
    spreads_cmd->callback([&] {
        const GameParams params(k, n);
        std::cout << "c,m,j,y,x,leftmost,rightmost,leftmost_index,rightmost_index,spread\n";
        for (chip_t c = 1; c <= params.total_chips(); ++c) {
            print_spread_row(params, c);
        }
        if (params.n >= 2) {
            const SpreadExtremes extremes = extreme_spreads(params);
            std::cout << "# smallest: " << extremes.smallest << " chips: " << join(extremes.smallest_chips) << '\n';
            std::cout << "# second_smallest: " << extremes.second_smallest
                      << " chips: " << join(extremes.second_smallest_chips) << '\n';
            std::cout << "# largest: " << extremes.largest << " chips: " << join(extremes.largest_chips) << '\n';
        } else {
            std::cout << "# all spreads are 1 when n < 2\n";
        }
    });

    // groups
    auto* groups_cmd = app.add_subcommand("groups", "boundary union U and identical-landing-set groups");
    add_params(groups_cmd);
    groups_cmd->callback([&] {
        const GameParams params(k, n);
        const GroupPartition partition = group_partition(params);
        std::cout << "U: " << join(partition.boundaries) << '\n';
        for (const ChipGroup& group : partition.groups) {
            std::cout << "group: " << group.lo << ".." << group.hi << '\n';
        }
        std::cout << "U_matches_group_starts: " << (partition.boundaries_match_group_starts ? "yes" : "no") << '\n';
    });

    // enumerate
    chip_t enum_guard = 9;
    auto* enum_cmd = app.add_subcommand("enumerate", "every reachable stable permutation");
    add_params(enum_cmd);
    enum_cmd->add_option("--guard", enum_guard, "maximum k^n admitted (default 9)");
    enum_cmd->callback([&] {
        EnumerationScope scope{GameParams(k, n), enum_guard, enum_guard};
        for (const StablePermutation& perm : enumerate_stable(scope)) {
            std::cout << join(perm) << '\n';
        }
    });

    // check
    std::string perm_text;
    chip_t check_guard = 16;
    auto* check_cmd = app.add_subcommand("check", "decide whether a stable permutation is reachable");
    add_params(check_cmd);
    check_cmd->add_option("--perm", perm_text, "comma-separated terminal reading")->required();
    check_cmd->add_option("--guard", check_guard, "maximum k^n admitted (default 16)");
    check_cmd->callback([&] {
        EnumerationScope scope{GameParams(k, n), 9, check_guard};
        std::cout << (is_reachable(parse_chip_list(perm_text), scope) ? "REACHABLE" : "UNREACHABLE") << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const chipfire::game_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
