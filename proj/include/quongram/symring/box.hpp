#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <vector>

#include "quongram/symring/modular.hpp"
#include "quongram/symring/poly.hpp"

namespace quongram::symring {

/// The factor 1 - q_T where q_T multiplies q_ij over all ordered pairs of
/// distinct slots of T. Supports are multisets: repeated labels arise from
/// degenerate-weight identification.
struct BoxFactor {
    std::vector<int> support;  // sorted, size >= 2

    friend auto operator<=>(const BoxFactor&, const BoxFactor&) = default;

    int size() const { return static_cast<int>(support.size()); }

    std::string str() const {
        std::ostringstream os;
        os << "box{";
        for (std::size_t i = 0; i < support.size(); ++i)
            os << (i ? "," : "") << support[i];
        os << "}";
        return os.str();
    }
};

inline BoxFactor canon_box(std::vector<int> support, ParamMode mode) {
    std::sort(support.begin(), support.end());
    if (mode == ParamMode::one_parameter) {
        // only the size matters; normalize the labels
        std::iota(support.begin(), support.end(), 1);
    }
    return BoxFactor{std::move(support)};
}

/// Monomial q_T = prod over ordered pairs of distinct slots.
inline Poly q_T_poly(const BoxFactor& b, ParamMode mode) {
    Monomial m;
    for (std::size_t a = 0; a < b.support.size(); ++a)
        for (std::size_t c = 0; c < b.support.size(); ++c)
            if (a != c)
                m = m * Monomial::var(canon_var(mode, b.support[a], b.support[c]));
    return Poly::monomial(m);
}

inline Poly expand_box(const BoxFactor& b, ParamMode mode) {
    return Poly::one() - q_T_poly(b, mode);
}

inline std::uint64_t eval_box(const BoxFactor& b, const ModPoint& pt) {
    std::uint64_t prod = 1;
    for (std::size_t a = 0; a < b.support.size(); ++a)
        for (std::size_t c = 0; c < b.support.size(); ++c)
            if (a != c) prod = pt.zp.mul(prod, pt.var(b.support[a], b.support[c]));
    return pt.zp.sub(1, prod);
}

/// Multiset of box factors; the only denominators the inversion formulas
/// ever produce.
struct BoxProduct {
    std::vector<std::pair<BoxFactor, int>> factors;  // sorted by factor, mult > 0

    friend auto operator<=>(const BoxProduct&, const BoxProduct&) = default;

    bool empty() const { return factors.empty(); }

    int multiplicity(const BoxFactor& b) const {
        for (auto& [f, m] : factors)
            if (f == b) return m;
        return 0;
    }

    void push(const BoxFactor& b, int mult = 1) {
        if (mult == 0) return;
        auto it = std::lower_bound(factors.begin(), factors.end(), b,
                                   [](const auto& p, const BoxFactor& x) { return p.first < x; });
        if (it != factors.end() && it->first == b) {
            it->second += mult;
            if (it->second == 0) factors.erase(it);
        } else {
            factors.insert(it, {b, mult});
        }
    }

    friend BoxProduct operator*(const BoxProduct& a, const BoxProduct& b) {
        BoxProduct r = a;
        for (auto& [f, m] : b.factors) r.push(f, m);
        return r;
    }

    static BoxProduct lcm(const BoxProduct& a, const BoxProduct& b) {
        BoxProduct r = a;
        for (auto& [f, m] : b.factors) {
            int have = r.multiplicity(f);
            if (have < m) r.push(f, m - have);
        }
        return r;
    }

    /// Multiset difference this \ b; requires b to be a sub-multiset.
    BoxProduct minus(const BoxProduct& b) const {
        BoxProduct r = *this;
        for (auto& [f, m] : b.factors) r.push(f, -m);
        return r;
    }

    bool submultiset_of(const BoxProduct& b) const {
        for (auto& [f, m] : factors)
            if (b.multiplicity(f) < m) return false;
        return true;
    }

    int total_multiplicity() const {
        int t = 0;
        for (auto& [f, m] : factors) t += m;
        return t;
    }

    Poly expand(ParamMode mode) const {
        Poly r = Poly::one();
        for (auto& [f, m] : factors) r *= expand_box(f, mode).pow(static_cast<unsigned>(m));
        return r;
    }

    std::uint64_t eval(const ModPoint& pt) const {
        std::uint64_t r = 1;
        for (auto& [f, m] : factors)
            r = pt.zp.mul(r, pt.zp.pow(eval_box(f, pt), static_cast<std::uint64_t>(m)));
        return r;
    }

    std::string str() const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (auto& [f, m] : factors) {
            if (!first) os << "*";
            first = false;
            os << f.str();
            if (m > 1) os << "^" << m;
        }
        return os.str();
    }
};

/// num / expand(den); den empty means a plain polynomial entry.
struct RatEntry {
    Poly num;
    BoxProduct den;

    bool is_zero() const { return num.is_zero(); }
};

}  // namespace quongram::symring
