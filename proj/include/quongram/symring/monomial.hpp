#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quongram/symring/param.hpp"

namespace quongram::symring {

/// Power product of ParamVars. Exponents are strictly positive; the factor
/// list is kept sorted by variable, which fixes the canonical form.
class Monomial {
  public:
    using Factor = std::pair<ParamVar, int>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> f) : f_(std::move(f)) { normalize(); }

    static Monomial var(ParamVar v, int e = 1) {
        if (e == 0) return {};
        return Monomial({{v, e}});
    }

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }

    int total_degree() const {
        int d = 0;
        for (auto& [v, e] : f_) d += e;
        return d;
    }

    int exponent(ParamVar v) const {
        for (auto& [w, e] : f_)
            if (w == v) return e;
        return 0;
    }

    Monomial operator*(const Monomial& o) const {
        std::vector<Factor> out;
        out.reserve(f_.size() + o.f_.size());
        auto a = f_.begin(), b = o.f_.begin();
        while (a != f_.end() && b != o.f_.end()) {
            if (a->first < b->first) out.push_back(*a++);
            else if (b->first < a->first) out.push_back(*b++);
            else {
                out.push_back({a->first, a->second + b->second});
                ++a, ++b;
            }
        }
        out.insert(out.end(), a, f_.end());
        out.insert(out.end(), b, o.f_.end());
        Monomial m;
        m.f_ = std::move(out);
        return m;
    }

    bool divides(const Monomial& o) const {
        for (auto& [v, e] : f_)
            if (o.exponent(v) < e) return false;
        return true;
    }

    /// Quotient o := *this / d; requires d.divides(*this).
    Monomial divided_by(const Monomial& d) const {
        std::vector<Factor> out;
        for (auto& [v, e] : f_) {
            int r = e - d.exponent(v);
            if (r > 0) out.push_back({v, r});
        }
        Monomial m;
        m.f_ = std::move(out);
        return m;
    }

    Monomial conjugated() const {
        std::vector<Factor> out;
        out.reserve(f_.size());
        for (auto& [v, e] : f_) out.push_back({v.swapped(), e});
        return Monomial(std::move(out));
    }

    /// Homomorphic variable replacement; images may collide.
    Monomial mapped(const std::function<ParamVar(ParamVar)>& fn) const {
        std::vector<Factor> out;
        out.reserve(f_.size());
        for (auto& [v, e] : f_) out.push_back({fn(v), e});
        return Monomial(std::move(out));
    }

    bool operator==(const Monomial& o) const { return f_ == o.f_; }

    std::size_t hash() const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto& [v, e] : f_) {
            h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v.row)) |
                 (static_cast<std::size_t>(static_cast<std::uint16_t>(v.col)) << 16) |
                 (static_cast<std::size_t>(e) << 32);
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    /// Graded lexicographic order on the fixed variable order.
    bool operator<(const Monomial& o) const {
        int da = total_degree(), db = o.total_degree();
        if (da != db) return da < db;
        // same degree: earlier variable with larger exponent is grlex-larger;
        // ordered so that iteration ascends from the constant term
        auto a = f_.begin(), b = o.f_.begin();
        while (a != f_.end() && b != o.f_.end()) {
            if (a->first != b->first) return b->first < a->first;
            if (a->second != b->second) return a->second < b->second;
            ++a, ++b;
        }
        return false;  // equal
    }

  private:
    void normalize() {
        std::sort(f_.begin(), f_.end(),
                  [](const Factor& a, const Factor& b) { return a.first < b.first; });
        std::vector<Factor> out;
        for (auto& [v, e] : f_) {
            if (e == 0) continue;
            if (!out.empty() && out.back().first == v) out.back().second += e;
            else out.push_back({v, e});
        }
        f_ = std::move(out);
    }

    std::vector<Factor> f_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace quongram::symring
