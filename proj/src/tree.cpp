#include "chipfire/tree.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace chipfire {

namespace {

int parse_decimal_digit(const std::string& token) {
    if (token.empty()) {
        throw game_error(errc::parse_error, "empty digit in traversal string");
    }
    long value = 0;
    for (char ch : token) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            throw game_error(errc::parse_error,
                             "traversal string contains non-digit character '" + std::string(1, ch) + "'");
        }
        value = value * 10 + (ch - '0');
        if (value > 1'000'000) {
            throw game_error(errc::invalid_digit, "digit " + token + " is out of range");
        }
    }
    return static_cast<int>(value);
}

} // namespace

TraversalString parse_traversal(const std::string& text, const GameParams& params) {
    std::vector<int> digits;
    if (params.k <= 9) {
        digits.reserve(text.size());
        for (char ch : text) {
            digits.push_back(parse_decimal_digit(std::string(1, ch)));
        }
    } else if (!text.empty()) {
        std::stringstream in(text);
        std::string token;
        while (std::getline(in, token, '.')) {
            digits.push_back(parse_decimal_digit(token));
        }
        if (!text.empty() && text.back() == '.') {
            throw game_error(errc::parse_error, "trailing '.' in traversal string");
        }
    }
    TraversalString t(std::move(digits));
    validate_string(t, params);
    return t;
}

std::string format_traversal(const TraversalString& t, const GameParams& params) {
    std::string out;
    for (int i = 0; i < t.length(); ++i) {
        if (params.k > 9 && i > 0) {
            out += '.';
        }
        out += std::to_string(t.digits[static_cast<std::size_t>(i)]);
    }
    return out;
}

void validate_string(const TraversalString& t, const GameParams& params) {
    for (int d : t.digits) {
        if (d < 1 || d > params.k) {
            throw game_error(errc::invalid_digit,
                             "digit " + std::to_string(d) + " outside [1, " + std::to_string(params.k) + "]");
        }
    }
    if (t.length() > params.n) {
        throw game_error(errc::string_too_long,
                         "traversal string of length " + std::to_string(t.length()) +
                             " exceeds depth n = " + std::to_string(params.n));
    }
}

void validate_order(const LandingOrder& o, const GameParams& params) {
    validate_string(o.t, params);
    const chip_t per_vertex = params.pow_k(params.n - o.t.length());
    if (o.x < 1 || o.x > per_vertex) {
        throw game_error(errc::rank_out_of_bounds,
                         "rank " + std::to_string(o.x) + " outside [1, " + std::to_string(per_vertex) +
                             "] on layer " + std::to_string(o.t.layer()));
    }
}

chip_t vertex_index(const TraversalString& t, const GameParams& params) {
    validate_string(t, params);
    const int len = t.length();
    chip_t index = 0;
    for (int l = 0; l < len; ++l) {
        index += (t.digits[static_cast<std::size_t>(l)] - 1) * params.pow_k(len - 1 - l);
    }
    return index + 1;
}

chip_t landing_order_index(const LandingOrder& o, const GameParams& params) {
    validate_order(o, params);
    const int len = o.t.length();
    chip_t index = 0;
    for (int l = 0; l < len; ++l) {
        index += (o.t.digits[static_cast<std::size_t>(l)] - 1) * params.pow_k(params.n - 1 - l);
    }
    return index + o.x;
}

chip_t chips_per_vertex(int layer, const GameParams& params) {
    if (layer < 1 || layer > params.n + 1) {
        throw game_error(errc::layer_out_of_range,
                         "layer " + std::to_string(layer) + " outside [1, " + std::to_string(params.n + 1) + "]");
    }
    return params.pow_k(params.n - layer + 1);
}

TraversalString reflect_string(const TraversalString& t, const GameParams& params) {
    validate_string(t, params);
    TraversalString mirrored(t);
    for (int& d : mirrored.digits) {
        d = params.k + 1 - d;
    }
    return mirrored;
}

LandingOrder reflect(const LandingOrder& o, const GameParams& params) {
    validate_order(o, params);
    const chip_t per_vertex = params.pow_k(params.n - o.t.length());
    return LandingOrder{reflect_string(o.t, params), per_vertex + 1 - o.x};
}

bool dominates(const LandingOrder& lo, const LandingOrder& hi) {
    if (lo.t.length() != hi.t.length()) {
        throw game_error(errc::length_mismatch, "domination compares equal-length traversal strings only");
    }
    for (std::size_t i = 0; i < lo.t.digits.size(); ++i) {
        if (lo.t.digits[i] > hi.t.digits[i]) {
            return false;
        }
    }
    return lo.x <= hi.x;
}

} // namespace chipfire
