#pragma once

#include <sstream>
#include <vector>

#include "quongram/symring/box.hpp"

namespace quongram::detkit {

using symring::BoxFactor;
using symring::ModPoint;
using symring::ParamMode;
using symring::Poly;

/// Determinant in factored form: a product of box factors with positive
/// integer exponents.
struct FactoredDet {
    std::vector<std::pair<BoxFactor, long long>> factors;  // sorted by factor

    void push(BoxFactor f, long long e) {
        if (e == 0) return;
        auto it = std::lower_bound(
            factors.begin(), factors.end(), f,
            [](const auto& p, const BoxFactor& x) { return p.first < x; });
        if (it != factors.end() && it->first == f) it->second += e;
        else factors.insert(it, {std::move(f), e});
    }

    Poly expand(ParamMode mode) const {
        Poly r = Poly::one();
        for (auto& [f, e] : factors)
            r *= expand_box(f, mode).pow(static_cast<unsigned>(e));
        return r;
    }

    std::uint64_t eval(const ModPoint& pt) const {
        std::uint64_t r = 1;
        for (auto& [f, e] : factors)
            r = pt.zp.mul(r, pt.zp.pow(eval_box(f, pt), static_cast<std::uint64_t>(e)));
        return r;
    }

    FactoredDet specialized(ParamMode mode) const {
        FactoredDet out;
        for (auto& [f, e] : factors) out.push(canon_box(f.support, mode), e);
        return out;
    }

    /// One-parameter display, e.g. "(1-q^2)^6 (1-q^6)".
    std::string str(ParamMode mode) const {
        if (factors.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        for (auto& [f, e] : factors) {
            if (!first) os << " ";
            first = false;
            if (mode == ParamMode::one_parameter) {
                int k = f.size();
                os << "(1-q^" << k * (k - 1) << ")";
            } else {
                os << "(" << expand_box(f, mode).str() << ")";
            }
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }
};

}  // namespace quongram::detkit
