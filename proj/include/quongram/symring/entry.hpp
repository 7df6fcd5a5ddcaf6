#pragma once

#include <map>
#include <stdexcept>

#include "quongram/symring/box.hpp"

namespace quongram::symring {

/// Thrown by the modular context when a sampled point kills a box factor;
/// callers resample.
struct BoxVanishes : std::runtime_error {
    BoxVanishes() : std::runtime_error("box factor vanishes at evaluation point") {}
};

/// Exact symbolic entries: integer polynomials over box-product denominators.
/// Cancellation only strips whole box factors detected by exact division.
class SymbolicCtx {
  public:
    using Entry = RatEntry;

    explicit SymbolicCtx(ParamMode mode = ParamMode::multi) : mode_(mode) {}

    ParamMode mode() const { return mode_; }
    bool uniform_words() const { return mode_ == ParamMode::one_parameter; }

    Entry zero() const { return {Poly::zero(), {}}; }
    Entry one() const { return {Poly::one(), {}}; }
    Entry from_int(long v) const { return {Poly::constant(Int(v)), {}}; }
    Entry from_poly(Poly p) const { return {std::move(p), {}}; }

    Entry var(int i, int j) const {
        return {Poly::variable(canon_var(mode_, i, j)), {}};
    }

    Entry add(const Entry& a, const Entry& b) const {
        if (a.num.is_zero()) return b;
        if (b.num.is_zero()) return a;
        BoxProduct l = BoxProduct::lcm(a.den, b.den);
        Poly num = a.num * expand_cached(l.minus(a.den)) + b.num * expand_cached(l.minus(b.den));
        return reduced({std::move(num), std::move(l)});
    }

    Entry sub(const Entry& a, const Entry& b) const { return add(a, neg(b)); }

    Entry neg(const Entry& a) const { return {-a.num, a.den}; }

    Entry mul(const Entry& a, const Entry& b) const {
        if (a.num.is_zero() || b.num.is_zero()) return zero();
        return reduced({a.num * b.num, a.den * b.den});
    }

    Entry mul_poly(const Entry& a, const Poly& p) const {
        if (p.is_zero() || a.num.is_zero()) return zero();
        return reduced({a.num * p, a.den});
    }

    Entry div_box(const Entry& a, const std::vector<int>& support) const {
        if (a.num.is_zero()) return zero();
        Entry r = a;
        r.den.push(canon_box(support, mode_));
        return reduced(std::move(r));
    }

    Entry mul_box(const Entry& a, const std::vector<int>& support) const {
        return mul_poly(a, box_poly(support));
    }

    Poly box_poly(const std::vector<int>& support) const {
        return expand_cached_factor(canon_box(support, mode_));
    }

    BoxFactor box(const std::vector<int>& support) const { return canon_box(support, mode_); }

    Entry conj(const Entry& a) const {
        // box factors are self-conjugate: the ordered-pair product is
        // invariant under the index swap
        Entry r{a.num.conjugated().specialized(mode_), a.den};
        return r;
    }

    bool is_zero(const Entry& a) const { return a.num.is_zero(); }

    bool equal(const Entry& a, const Entry& b) const {
        if (a.den == b.den) return a.num == b.num;
        return a.num * expand_cached(b.den) == b.num * expand_cached(a.den);
    }

    Poly expand_entry_den(const Entry& a) const { return expand_cached(a.den); }

    /// Strip box factors that divide the numerator exactly.
    Entry reduced(Entry e) const {
        if (e.num.is_zero()) return zero();
        if (e.den.empty()) return e;
        BoxProduct out;
        Poly num = std::move(e.num);
        for (auto& [f, m] : e.den.factors) {
            int keep = m;
            const Poly& fx = expand_cached_factor(f);
            while (keep > 0) {
                auto q = num.divided_by(fx);
                if (!q) break;
                num = std::move(*q);
                --keep;
            }
            if (keep > 0) out.push(f, keep);
        }
        return {std::move(num), std::move(out)};
    }

  private:
    const Poly& expand_cached_factor(const BoxFactor& f) const {
        auto it = cache_.find(f);
        if (it == cache_.end()) it = cache_.emplace(f, expand_box(f, mode_)).first;
        return it->second;
    }

    Poly expand_cached(const BoxProduct& bp) const {
        Poly r = Poly::one();
        for (auto& [f, m] : bp.factors)
            r *= expand_cached_factor(f).pow(static_cast<unsigned>(m));
        return r;
    }

    ParamMode mode_;
    mutable std::map<BoxFactor, Poly> cache_;
};

/// Entries as residues at one random evaluation point (Schwartz-Zippel
/// backend). Division by a box multiplies by the inverse of its value.
class ModularCtx {
  public:
    using Entry = std::uint64_t;

    explicit ModularCtx(ModPoint pt) : pt_(std::move(pt)) {}

    const ModPoint& point() const { return pt_; }
    ParamMode mode() const { return pt_.mode; }
    bool uniform_words() const { return pt_.mode == ParamMode::one_parameter; }

    Entry zero() const { return 0; }
    Entry one() const { return 1; }
    Entry from_int(long v) const {
        Int w(v);
        return pt_.zp.reduce(w);
    }
    Entry from_poly(const Poly& p) const { return pt_.eval(p); }

    Entry var(int i, int j) const { return pt_.var(i, j); }

    Entry add(Entry a, Entry b) const { return pt_.zp.add(a, b); }
    Entry sub(Entry a, Entry b) const { return pt_.zp.sub(a, b); }
    Entry mul(Entry a, Entry b) const { return pt_.zp.mul(a, b); }
    Entry neg(Entry a) const { return pt_.zp.sub(0, a); }
    Entry mul_poly(Entry a, const Poly& p) const { return mul(a, from_poly(p)); }

    Entry div_box(Entry a, const std::vector<int>& support) const {
        std::uint64_t v = eval_box(canon_box(support, pt_.mode), pt_);
        if (v == 0) throw BoxVanishes{};
        return pt_.zp.mul(a, pt_.zp.inv(v));
    }

    Entry mul_box(Entry a, const std::vector<int>& support) const {
        return pt_.zp.mul(a, eval_box(canon_box(support, pt_.mode), pt_));
    }

    bool is_zero(Entry a) const { return a == 0; }
    bool equal(Entry a, Entry b) const { return a == b; }

  private:
    ModPoint pt_;
};

}  // namespace quongram::symring
