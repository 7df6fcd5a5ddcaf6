#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace quongram::symring {

/// One deformation parameter q_ij. The pair (0,0) is reserved for the single
/// variable q of the one-parameter specialization.
struct ParamVar {
    std::int16_t row = 0;
    std::int16_t col = 0;

    friend auto operator<=>(const ParamVar&, const ParamVar&) = default;

    static ParamVar q() { return {0, 0}; }
    bool is_q() const { return row == 0 && col == 0; }

    /// Index-swap involution q_ij -> q_ji.
    ParamVar swapped() const { return {col, row}; }

    std::string str() const {
        if (is_q()) return "q";
        return "q[" + std::to_string(row) + "," + std::to_string(col) + "]";
    }
};

enum class ParamMode {
    multi,           // all q_ij free, involution swaps indices
    real_symmetric,  // q_ij = q_ji identified, self-conjugate
    one_parameter,   // every q_ij maps to the single variable q
};

inline ParamVar canon_var(ParamMode mode, int i, int j) {
    switch (mode) {
        case ParamMode::multi:
            return {static_cast<std::int16_t>(i), static_cast<std::int16_t>(j)};
        case ParamMode::real_symmetric:
            return {static_cast<std::int16_t>(std::min(i, j)),
                    static_cast<std::int16_t>(std::max(i, j))};
        case ParamMode::one_parameter:
            return ParamVar::q();
    }
    throw std::logic_error("bad mode");
}

inline ParamVar canon_var(ParamMode mode, ParamVar v) {
    if (v.is_q()) return v;
    return canon_var(mode, v.row, v.col);
}

inline std::string mode_name(ParamMode m) {
    switch (m) {
        case ParamMode::multi: return "multi";
        case ParamMode::real_symmetric: return "real";
        case ParamMode::one_parameter: return "one";
    }
    return "?";
}

inline ParamMode mode_from_name(const std::string& s) {
    if (s == "multi") return ParamMode::multi;
    if (s == "real" || s == "real-symmetric") return ParamMode::real_symmetric;
    if (s == "one" || s == "one-parameter") return ParamMode::one_parameter;
    throw std::invalid_argument("unknown parameter mode: " + s);
}

}  // namespace quongram::symring
