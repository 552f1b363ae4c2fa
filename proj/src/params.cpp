#include "chipfire/params.hpp"

#include <limits>
#include <string>

namespace chipfire {

chip_t checked_pow(chip_t base, int exp) {
    if (base < 1 || exp < 0) {
        throw game_error(errc::invalid_params, "checked_pow: base must be >= 1 and exponent >= 0");
    }
    chip_t result = 1;
    for (int i = 0; i < exp; ++i) {
        if (result > std::numeric_limits<chip_t>::max() / base) {
            throw game_error(errc::invalid_params,
                             std::to_string(base) + "^" + std::to_string(exp) +
                                 " exceeds the 63-bit integer range");
        }
        result *= base;
    }
    return result;
}

GameParams::GameParams(int k_, int n_) : k(k_), n(n_) {
    if (k < 2) {
        throw game_error(errc::invalid_params, "branching factor k must be at least 2");
    }
    if (n < 0) {
        throw game_error(errc::invalid_params, "depth exponent n must be nonnegative");
    }
    checked_pow(k, n); // reject games whose chip count overflows
}

} // namespace chipfire
