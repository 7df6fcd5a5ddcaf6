#pragma once

#include <map>
#include <sstream>

#include "quongram/detkit/closed.hpp"

namespace quongram::apps {

using quongram::Int;

/// Symmetric integer Cartan-type data b_kl, 1 <= k < l <= n.
struct CartanData {
    int n = 0;
    std::map<std::pair<int, int>, long long> b;  // keyed k < l

    long long at(int k, int l) const {
        if (k == l) throw std::invalid_argument("b_kk undefined");
        auto it = b.find({std::min(k, l), std::max(k, l)});
        if (it == b.end()) throw std::invalid_argument("missing b entry");
        return it->second;
    }

    long long total() const {
        long long s = 0;
        for (auto& [kl, v] : b) s += v;
        return s;
    }
};

/// Laurent polynomial in u where u^2 = q; all half-integer q-powers of the
/// contravariant form become integer u-powers.
struct LaurentU {
    std::map<long long, Int> c;  // exponent -> coefficient

    static LaurentU zero() { return {}; }
    static LaurentU one() { return monomial(0, 1); }
    static LaurentU monomial(long long e, Int k) {
        LaurentU r;
        if (k != 0) r.c[e] = std::move(k);
        return r;
    }

    void add(long long e, const Int& k) {
        if (k == 0) return;
        auto it = c.find(e);
        if (it == c.end()) c.emplace(e, k);
        else {
            it->second += k;
            if (it->second == 0) c.erase(it);
        }
    }

    friend LaurentU operator*(const LaurentU& a, const LaurentU& b) {
        LaurentU r;
        for (auto& [ea, ka] : a.c)
            for (auto& [eb, kb] : b.c) r.add(ea + eb, ka * kb);
        return r;
    }

    LaurentU pow(long long e) const {
        LaurentU r = one(), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const LaurentU& o) const { return c == o.c; }
    bool is_zero() const { return c.empty(); }
};

struct ContravariantFactor {
    std::vector<int> subset;  // i_1 < ... < i_m
    long long s;              // sum of b over pairs in the subset
    long long mult;           // (m-2)!(n-m+1)!
};

/// det S on the (1,...,1) weight space:
///   q^{-(n!/4) sum b_kl} prod (1 - q^{s})^{mult}
///   = prod (q^{-s/2} - q^{s/2})^{mult}.
struct ContravariantDet {
    int n = 0;
    long long prefactor_u = 0;  // exponent of u in the monomial prefactor
    std::vector<ContravariantFactor> factors;

    LaurentU expand_first_form() const {
        LaurentU r = LaurentU::monomial(prefactor_u, 1);
        for (auto& f : factors) {
            LaurentU base = LaurentU::monomial(0, 1);
            base.add(2 * f.s, -1);  // 1 - q^s = 1 - u^{2s}
            r = r * base.pow(f.mult);
        }
        return r;
    }

    LaurentU expand_second_form() const {
        LaurentU r = LaurentU::one();
        for (auto& f : factors) {
            LaurentU base = LaurentU::monomial(-f.s, 1);
            base.add(f.s, -1);  // q^{-s/2} - q^{s/2}
            r = r * base.pow(f.mult);
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << "q^(-" << factorial(n).str() << "/4 * sum b) ";
        for (auto& f : factors) {
            os << "(1-q^" << f.s << ")";
            if (f.mult > 1) os << "^" << f.mult;
            os << " ";
        }
        return os.str();
    }
};

inline ContravariantDet contravariant_det(const CartanData& cartan) {
    int n = cartan.n;
    ContravariantDet out;
    out.n = n;
    Int pref = -factorial(n) * cartan.total() / 2;  // q^{-n!/4 sum} = u^{-n!/2 sum}
    out.prefactor_u = static_cast<long long>(pref);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (int m = 2; m <= n; ++m) {
        long long mult = 1;
        for (int t = 2; t <= m - 2; ++t) mult *= t;
        for (int t = 2; t <= n - m + 1; ++t) mult *= t;
        detkit::detail::for_each_subset(all, m, [&](const std::vector<int>& subset) {
            long long s = 0;
            for (std::size_t x = 0; x < subset.size(); ++x)
                for (std::size_t y = x + 1; y < subset.size(); ++y)
                    s += cartan.at(subset[x], subset[y]);
            out.factors.push_back({subset, s, mult});
        });
    }
    return out;
}

/// Gram determinant under q_ij := q^{-b_ij/2} = u^{-b_ij}, expanded from the
/// closed factored form: every box factor becomes 1 - u^{-2 s_mu}.
inline LaurentU det_closed_substituted(const CartanData& cartan) {
    auto fd = detkit::det_closed(fock::Weight::generic(cartan.n));
    LaurentU r = LaurentU::one();
    for (auto& [f, e] : fd.factors) {
        long long s = 0;
        for (std::size_t x = 0; x < f.support.size(); ++x)
            for (std::size_t y = x + 1; y < f.support.size(); ++y)
                s += cartan.at(f.support[x], f.support[y]);
        LaurentU base = LaurentU::monomial(0, 1);
        base.add(-2 * s, -1);
        r = r * base.pow(e);
    }
    return r;
}

/// Exponent bookkeeping: the two displayed forms agree, and the factor
/// product equals the substituted Gram determinant up to the monomial
/// (-1)^{sum mult} u^{n! sum b}: each box factor 1 - u^{-2s} flips to
/// 1 - u^{2s} at the cost of -u^{-2s}, and sum of s*mult is (n!/2) sum b.
inline bool contravariant_matches_gram(const CartanData& cartan) {
    ContravariantDet d = contravariant_det(cartan);
    LaurentU first = d.expand_first_form();
    LaurentU second = d.expand_second_form();
    if (!(first == second)) return false;

    LaurentU lhs = LaurentU::one();
    long long total_mult = 0;
    for (auto& f : d.factors) {
        LaurentU base = LaurentU::monomial(0, 1);
        base.add(2 * f.s, -1);
        lhs = lhs * base.pow(f.mult);
        total_mult += f.mult;
    }
    Int shift = factorial(cartan.n) * cartan.total();
    LaurentU rhs = det_closed_substituted(cartan) *
                   LaurentU::monomial(static_cast<long long>(shift),
                                      total_mult % 2 ? Int(-1) : Int(1));
    return lhs == rhs;
}

}  // namespace quongram::apps
