#pragma once

#include <stdexcept>
#include <string>

namespace chipfire {

enum class errc {
    invalid_params,
    invalid_digit,
    string_too_long,
    length_mismatch,
    rank_out_of_bounds,
    layer_out_of_range,
    missing_chip,
    wrong_arity,
    terminal_vertex,
    not_layered,
    incomplete_strategy,
    chip_out_of_range,
    trivial_chip,
    domination_violated,
    infeasible_window,
    scope_exceeded,
    not_a_permutation,
    parse_error,
};

/// Domain error carrying a machine-checkable reason code.
class game_error : public std::runtime_error {
public:
    game_error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace chipfire
