#pragma once

#include <optional>

#include "quongram/invkit/lambda.hpp"

namespace quongram::invkit {

using symring::BoxProduct;
using quongram::Int;
using symring::ParamMode;
using symring::Poly;

namespace uni {

/// Dense univariate view of a polynomial in the single variable q.
inline std::vector<Int> coeffs(const Poly& p) {
    std::vector<Int> c;
    for (auto& [m, k] : p.terms()) {
        int d = 0;
        for (auto& [v, e] : m.factors()) {
            if (!v.is_q()) throw std::invalid_argument("not a one-parameter polynomial");
            d = e;
        }
        if (d >= static_cast<int>(c.size())) c.resize(d + 1, 0);
        c[d] = k;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

inline Poly to_poly(const std::vector<Int>& c) {
    Poly p;
    for (std::size_t d = 0; d < c.size(); ++d)
        if (c[d] != 0)
            p.add_term(symring::Monomial::var(symring::ParamVar::q(), static_cast<int>(d)), c[d]);
    return p;
}

inline Int content(const std::vector<Int>& a) {
    Int g = 0;
    for (auto& c : a) g = boost::multiprecision::gcd(g, c);
    return g;
}

inline std::vector<Int> primitive(std::vector<Int> a) {
    Int g = content(a);
    if (g > 1)
        for (auto& c : a) c /= g;
    return a;
}

/// Pseudo-remainder of a by b (b nonzero), with scaling kept small by gcds.
inline std::vector<Int> prem(std::vector<Int> a, const std::vector<Int>& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Int lead_a = a.back(), lead_b = b.back();
        Int g = boost::multiprecision::gcd(lead_a, lead_b);
        Int ma = lead_b / g, mb = lead_a / g;
        std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= ma;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= mb * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline std::vector<Int> gcd(std::vector<Int> a, std::vector<Int> b) {
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        auto r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

inline Poly poly_gcd(const Poly& a, const Poly& b) { return to_poly(gcd(coeffs(a), coeffs(b))); }

}  // namespace uni

/// Zagier's product Delta_n = prod_{k=2}^n (1 - q^{k(k-1)}).
inline Poly zagier_delta_plain(int n) {
    Poly p = Poly::one();
    for (int k = 2; k <= n; ++k) {
        Poly f = Poly::one();
        f -= Poly::variable(symring::ParamVar::q(), k * (k - 1));
        p *= f;
    }
    return p;
}

/// delta_n(q) = prod_{k=2}^n (1 - q^{k(k-1)})^{n-k+1} as a box multiset.
inline BoxProduct zagier_delta_extended(int n) {
    BoxProduct bp;
    for (int k = 2; k <= n; ++k) {
        std::vector<int> s(k);
        std::iota(s.begin(), s.end(), 1);
        bp.push(canon_box(s, ParamMode::one_parameter), n - k + 1);
    }
    return bp;
}

/// box^nu at a word: one interval box per pair 1 <= a < b <= n.
inline BoxProduct box_nu_at_word(const Word& w, ParamMode mode) {
    BoxProduct bp;
    int n = static_cast<int>(w.size());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) bp.push(canon_box(letters_at(w, a, b), mode), 1);
    return bp;
}

struct ZagierCertificate {
    int n = 0;
    ParamMode mode = ParamMode::one_parameter;
    BoxProduct denominator;        // the extended per-entry target
    std::map<Perm, Poly> witness;  // numerator after clearing the extended target
    bool extended_holds = true;
    std::optional<Perm> extended_failing;
    std::optional<bool> original_holds;  // engaged in one-parameter mode
    std::optional<Perm> original_failing;
    Poly offending_factor;  // uncancellable denominator part at the original failure
};

/// Default witness family: all of S_n while feasible, otherwise the block
/// reversals w_J (depth-one tree-like elements; they include the known n=8
/// failure of the original conjecture).
inline std::vector<Perm> default_zagier_witnesses(int n, ParamMode mode) {
    int full_cap = mode == ParamMode::one_parameter ? 6 : 4;
    if (n <= full_cap) return combin::all_perms(n);
    std::vector<Perm> out;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> J;
        for (int i = 0; i < n - 1; ++i)
            if (mask & (1u << i)) J.insert(i + 1);
        out.push_back(combin::w_of_cuts(n, J));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline ZagierCertificate zagier_certificate(int n, ParamMode mode,
                                            std::vector<Perm> witnesses = {}) {
    symring::SymbolicCtx ctx(mode);
    ZagierCertificate cert;
    cert.n = n;
    cert.mode = mode;
    if (witnesses.empty()) witnesses = default_zagier_witnesses(n, mode);

    std::optional<fock::Basis> basis;
    if (mode != ParamMode::one_parameter) basis.emplace(fock::Weight::generic(n));

    Word canonical(n);
    std::iota(canonical.begin(), canonical.end(), 1);
    cert.denominator = mode == ParamMode::one_parameter ? zagier_delta_extended(n)
                                                        : box_nu_at_word(canonical, mode);
    Poly delta_plain = zagier_delta_plain(n);
    if (mode == ParamMode::one_parameter) cert.original_holds = true;

    for (auto& g : witnesses) {
        if (mode == ParamMode::one_parameter) {
            symring::RatEntry lam = lambda_fast_scalar(ctx, n, g);
            symring::RatEntry entry =
                ctx.mul_poly(lam, Poly::variable(symring::ParamVar::q(), 1).pow(g.length()));
            if (entry.is_zero()) {
                cert.witness[g] = Poly::zero();
                continue;
            }
            if (!entry.den.submultiset_of(cert.denominator)) {
                cert.extended_holds = false;
                if (!cert.extended_failing) cert.extended_failing = g;
            } else {
                cert.witness[g] = entry.num * cert.denominator.minus(entry.den).expand(mode);
            }
            Poly den = entry.den.expand(mode);
            Poly numdelta = entry.num * delta_plain;
            if (!numdelta.divisible_by(den) && *cert.original_holds) {
                cert.original_holds = false;
                cert.original_failing = g;
                Poly common = uni::poly_gcd(numdelta, den);
                Poly off = *den.divided_by(common);
                if (!off.is_zero() && off.terms().begin()->second < 0) off = -off;
                cert.offending_factor = off;
            }
        } else {
            DiagValue<symring::SymbolicCtx> lam = lambda_fast(ctx, *basis, g);
            bool ok = true;
            for (int i = 0; i < basis->dim() && ok; ++i) {
                const symring::RatEntry& e = lam.uniform ? lam.u : lam.v[i];
                ok = e.den.submultiset_of(box_nu_at_word(basis->word(i), mode));
            }
            if (!ok) {
                cert.extended_holds = false;
                if (!cert.extended_failing) cert.extended_failing = g;
                continue;
            }
            const symring::RatEntry& e0 = lam.uniform ? lam.u : lam.v[0];
            cert.witness[g] =
                e0.num * box_nu_at_word(basis->word(0), mode).minus(e0.den).expand(mode);
        }
    }
    return cert;
}

}  // namespace quongram::invkit
