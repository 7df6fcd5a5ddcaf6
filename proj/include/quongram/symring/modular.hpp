#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "quongram/symring/poly.hpp"

namespace quongram::symring {

/// Arithmetic in Z/p for a word-size prime p (p < 2^32 so products fit u64
/// via 128-bit intermediate).
struct Zp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a % p == 0) throw std::domain_error("inverse of zero mod p");
        return pow(a, p - 2);
    }
    std::uint64_t reduce(const Int& v) const {
        Int m = v % Int(p);
        if (m < 0) m += p;
        return static_cast<std::uint64_t>(m);
    }
};

/// Default primes for randomized identity testing; all exceed 2^30.
inline const std::vector<std::uint64_t>& default_primes() {
    static const std::vector<std::uint64_t> ps = {2147483647ULL, 2147483629ULL, 2147483587ULL};
    return ps;
}

inline std::uint64_t Poly_eval_mod_impl(const Poly& poly,
                                        const std::function<std::uint64_t(ParamVar)>& point,
                                        std::uint64_t p) {
    Zp zp{p};
    std::uint64_t acc = 0;
    for (auto& [m, c] : poly.terms()) {
        std::uint64_t t = zp.reduce(c);
        for (auto& [v, e] : m.factors())
            t = zp.mul(t, zp.pow(point(v), static_cast<std::uint64_t>(e)));
        acc = zp.add(acc, t);
    }
    return acc;
}

inline std::uint64_t Poly::eval_mod(const std::function<std::uint64_t(ParamVar)>& point,
                                    std::uint64_t p) const {
    return Poly_eval_mod_impl(*this, point, p);
}

/// A full evaluation point: nonzero residues for every canonical variable on
/// labels 1..max_label (including q_ii and the one-parameter q).
struct ModPoint {
    ParamMode mode;
    Zp zp;
    std::map<ParamVar, std::uint64_t> values;

    static ModPoint random(ParamMode mode, int max_label, std::uint64_t prime,
                           std::mt19937_64& rng) {
        ModPoint pt{mode, Zp{prime}, {}};
        std::uniform_int_distribution<std::uint64_t> dist(1, prime - 1);
        pt.values[ParamVar::q()] = dist(rng);
        for (int i = 1; i <= max_label; ++i)
            for (int j = 1; j <= max_label; ++j) {
                ParamVar v = canon_var(mode, i, j);
                if (!pt.values.count(v)) pt.values[v] = dist(rng);
            }
        return pt;
    }

    std::uint64_t var(int i, int j) const { return values.at(canon_var(mode, i, j)); }
    std::uint64_t var(ParamVar v) const { return values.at(canon_var(mode, v)); }

    std::uint64_t eval(const Poly& p) const {
        return p.eval_mod([this](ParamVar v) { return var(v); }, zp.p);
    }
};

}  // namespace quongram::symring
