#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "quongram/symring/bigint.hpp"
#include "quongram/symring/monomial.hpp"

namespace quongram::symring {

/// Sparse polynomial over Z in the parameters q_ij. Terms are kept in graded
/// lexicographic order with nonzero coefficients only.
class Poly {
  public:
    using Terms = std::map<Monomial, Int>;

    Poly() = default;
    explicit Poly(Int c) {
        if (c != 0) t_[Monomial{}] = std::move(c);
    }

    static Poly zero() { return {}; }
    static Poly one() { return Poly(Int(1)); }
    static Poly constant(Int c) { return Poly(std::move(c)); }
    static Poly variable(ParamVar v, int e = 1) {
        Poly p;
        p.t_[Monomial::var(v, e)] = 1;
        return p;
    }
    static Poly variable(int i, int j, int e = 1) {
        return variable(ParamVar{static_cast<std::int16_t>(i), static_cast<std::int16_t>(j)}, e);
    }
    static Poly monomial(Monomial m, Int c = 1) {
        Poly p;
        if (c != 0) p.t_[std::move(m)] = std::move(c);
        return p;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const {
        return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
    }
    std::size_t term_count() const { return t_.size(); }

    int degree() const {
        int d = -1;
        for (auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0) return;
        auto it = t_.find(m);
        if (it == t_.end()) {
            t_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.t_.size() <= 2 || b.t_.size() <= 2) {
            for (auto& [ma, ca] : a.t_)
                for (auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
            return r;
        }
        // hash accumulation avoids repeated ordered-map rebalancing on
        // large products
        std::unordered_map<Monomial, Int, MonomialHash> acc;
        acc.reserve(a.t_.size() * b.t_.size() / 4 + 8);
        for (auto& [ma, ca] : a.t_)
            for (auto& [mb, cb] : b.t_) acc[ma * mb] += ca * cb;
        for (auto& [m, c] : acc)
            if (c != 0) r.t_.emplace(m, std::move(c));
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& operator*=(const Int& c) {
        if (c == 0) { t_.clear(); return *this; }
        for (auto& [m, k] : t_) k *= c;
        return *this;
    }

    Poly pow(unsigned e) const {
        Poly r = one(), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    /// q_ij -> q_ji on every variable; coefficients fixed.
    Poly conjugated() const {
        Poly r;
        for (auto& [m, c] : t_) r.add_term(m.conjugated(), c);
        return r;
    }

    /// Homomorphic image under a variable map (collisions merge exponents).
    Poly mapped(const std::function<ParamVar(ParamVar)>& fn) const {
        Poly r;
        for (auto& [m, c] : t_) r.add_term(m.mapped(fn), c);
        return r;
    }

    Poly specialized(ParamMode mode) const {
        if (mode == ParamMode::multi) return *this;
        return mapped([mode](ParamVar v) { return canon_var(mode, v); });
    }

    /// Exact division; nullopt when the divisor does not divide exactly.
    std::optional<Poly> divided_by(const Poly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        Poly rem = *this, quo;
        const auto& dl = *d.t_.rbegin();  // leading term (grlex max)
        while (!rem.is_zero()) {
            const auto& rl = *rem.t_.rbegin();
            if (!dl.first.divides(rl.first)) return std::nullopt;
            if (rl.second % dl.second != 0) return std::nullopt;
            Monomial qm = rl.first.divided_by(dl.first);
            Int qc = rl.second / dl.second;
            quo.add_term(qm, qc);
            Poly step = Poly::monomial(qm, qc) * d;
            rem -= step;
        }
        return quo;
    }

    bool divisible_by(const Poly& d) const { return divided_by(d).has_value(); }

    std::uint64_t eval_mod(const std::function<std::uint64_t(ParamVar)>& point,
                           std::uint64_t p) const;

    std::string str() const {
        if (t_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [m, c] : t_) {
            Int a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool wrote = false;
            if (a != 1 || m.is_one()) {
                os << a.str();
                wrote = true;
            }
            for (auto& [v, e] : m.factors()) {
                if (wrote) os << "*";
                os << v.str();
                if (e > 1) os << "^" << e;
                wrote = true;
            }
        }
        return os.str();
    }

  private:
    Terms t_;
};

inline Poly operator*(Poly a, const Int& c) { return a *= c; }
inline Poly operator*(const Int& c, Poly a) { return a *= c; }

}  // namespace quongram::symring
