#pragma once

#include <optional>

#include "quongram/combin/young.hpp"
#include "quongram/invkit/inverse.hpp"

namespace quongram::invkit {

using combin::Subdivision;
using combin::YoungSequence;

/// Value of one diagonal matrix: a single entry when the context makes every
/// word equivalent (one-parameter mode), otherwise a value per basis word.
template <class Ctx>
struct DiagValue {
    using Entry = typename Ctx::Entry;
    bool uniform = false;
    Entry u{};
    std::vector<Entry> v;

    static DiagValue uniform_of(Entry e) { return {true, std::move(e), {}}; }
    Entry at(int i) const { return uniform ? u : v[i]; }

    std::vector<Entry> materialize(int dim) const {
        if (!uniform) return v;
        return std::vector<Entry>(static_cast<std::size_t>(dim), u);
    }

    bool is_zero(const Ctx& ctx) const {
        if (uniform) return ctx.is_zero(u);
        for (auto& e : v)
            if (!ctx.is_zero(e)) return false;
        return true;
    }
};

namespace detail {

template <class Ctx>
using Memo = std::map<std::vector<Interval>, typename Ctx::Entry>;

/// Thickened identity coefficient at one word, by the subdivision recursion:
/// T(J_1..J_l) = (1/box_{union}) sum over regroupings into >= 2 consecutive
/// groups of (-1)^{#groups} prod T(group); a single part gives 1.
template <class Ctx>
typename Ctx::Entry thickened_at(const Ctx& ctx, const Word& w,
                                 const std::vector<Interval>& parts, Memo<Ctx>& memo) {
    if (parts.size() <= 1) return ctx.one();
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
    int l = static_cast<int>(parts.size());
    typename Ctx::Entry sum = ctx.zero();
    for (unsigned mask = 1; mask < (1u << (l - 1)); ++mask) {
        typename Ctx::Entry prod = ctx.one();
        int groups = 1, start = 0;
        for (int i = 0; i < l - 1; ++i) {
            if (!(mask & (1u << i))) continue;
            ++groups;
            prod = ctx.mul(prod, thickened_at(ctx, w,
                                              std::vector<Interval>(parts.begin() + start,
                                                                    parts.begin() + i + 1),
                                              memo));
            start = i + 1;
        }
        prod = ctx.mul(prod, thickened_at(ctx, w,
                                          std::vector<Interval>(parts.begin() + start,
                                                                parts.end()),
                                          memo));
        if (groups % 2) prod = ctx.neg(prod);
        sum = ctx.add(sum, prod);
    }
    typename Ctx::Entry r = ctx.div_box(sum, letters_at(w, parts.front().a, parts.back().b));
    memo.emplace(parts, r);
    return r;
}

/// Q_sigma at one word: over every nondegenerate block, all ordered pairs.
template <class Ctx>
typename Ctx::Entry q_of_subdivision_at(const Ctx& ctx, const Word& w, const Subdivision& sigma) {
    typename Ctx::Entry e = ctx.one();
    for (auto& iv : sigma.intervals()) {
        if (iv.degenerate()) continue;
        for (int a = iv.a; a <= iv.b; ++a)
            for (int b = iv.a; b <= iv.b; ++b)
                if (a != b) e = ctx.mul(e, ctx.var(w[a - 1], w[b - 1]));
    }
    return e;
}

/// q_{w,g^{-1}} at one word (the g-th diagonal of the Gram matrix).
template <class Ctx>
typename Ctx::Entry q_of_perm_at(const Ctx& ctx, const Word& w, const Perm& g) {
    typename Ctx::Entry e = ctx.one();
    for (auto& [a, b] : g.inverse().inversion_set())
        e = ctx.mul(e, ctx.var(w[a - 1], w[b - 1]));
    return e;
}

/// Blocks of `fine` lying inside one block of the coarser subdivision.
inline std::vector<Interval> blocks_within(const Subdivision& fine, const Interval& coarse) {
    std::vector<Interval> out;
    for (auto& iv : fine.intervals())
        if (coarse.contains(iv)) out.push_back(iv);
    return out;
}

}  // namespace detail

/// Lambda^nu(g) evaluated at a single word: zero unless g is tree-like, in
/// which case it is the signed product of thickened identity coefficients
/// along the Young sequence with the Q factors of the odd levels.
template <class Ctx>
typename Ctx::Entry lambda_at_word(const Ctx& ctx, const Word& w, const Perm& g) {
    YoungSequence ys = combin::young_sequence(g);
    if (!ys.tree_like) return ctx.zero();
    int d = *ys.depth;
    std::vector<Subdivision> sigma;
    sigma.reserve(d + 1);
    for (int k = 0; k <= d; ++k) sigma.push_back(combin::young_data(ys.seq[k]).sigma);

    long long N = 0;
    for (auto& s : sigma)
        for (auto& iv : s.intervals()) N += iv.size() - 1;

    detail::Memo<Ctx> memo;
    typename Ctx::Entry val = detail::thickened_at(ctx, w, sigma[0].intervals(), memo);
    for (int k = 1; k <= d; ++k)
        for (auto& block : sigma[k - 1].intervals())
            val = ctx.mul(val,
                          detail::thickened_at(ctx, w, detail::blocks_within(sigma[k], block),
                                               memo));
    for (int k = 1; k <= d; k += 2)
        val = ctx.mul(val, detail::q_of_subdivision_at(ctx, w, sigma[k]));
    if (N % 2) val = ctx.neg(val);
    return val;
}

/// Single-diagonal query; in one-parameter mode no basis is touched.
template <class Ctx>
DiagValue<Ctx> lambda_fast(const Ctx& ctx, const Basis& basis, const Perm& g) {
    if (ctx.uniform_words())
        return DiagValue<Ctx>::uniform_of(
            lambda_at_word(ctx, basis.weight().letters(), g));
    DiagValue<Ctx> d;
    d.v.reserve(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) d.v.push_back(lambda_at_word(ctx, basis.word(i), g));
    return d;
}

/// Scalar form for uniform contexts; never builds a word basis.
template <class Ctx>
typename Ctx::Entry lambda_fast_scalar(const Ctx& ctx, int n, const Perm& g) {
    if (!ctx.uniform_words())
        throw std::invalid_argument("scalar lambda query requires one-parameter mode");
    Word w(n);
    std::iota(w.begin(), w.end(), 1);
    return lambda_at_word(ctx, w, g);
}

/// Thickened identity coefficient as a diagonal value.
template <class Ctx>
DiagValue<Ctx> thickened_identity(const Ctx& ctx, const Basis& basis,
                                  const std::vector<Interval>& parts) {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i].a != parts[i - 1].b + 1)
            throw std::invalid_argument("parts must tile a contiguous interval");
    detail::Memo<Ctx> memo;
    if (ctx.uniform_words()) {
        return DiagValue<Ctx>::uniform_of(
            detail::thickened_at(ctx, basis.weight().letters(), parts, memo));
    }
    DiagValue<Ctx> d;
    d.v.reserve(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) {
        detail::Memo<Ctx> m;
        d.v.push_back(detail::thickened_at(ctx, basis.word(i), parts, m));
    }
    return d;
}

/// Lambda(id) by the bracketing sum with outer brackets, by the dual sum
/// without outer brackets, and by the subdivision recursion; the three are
/// required to agree.
template <class Ctx>
DiagValue<Ctx> lambda_identity(const Ctx& ctx, const Basis& basis) {
    int n = basis.n();
    auto at_word = [&](const Word& w) {
        // i): sum over bracketings with outer bracket of (-1)^{b+n-1}/box_beta
        typename Ctx::Entry with = ctx.zero();
        for (auto& beta : combin::all_bracketings(n, true)) {
            typename Ctx::Entry t = ctx.one();
            for (auto& iv : beta.brackets) t = ctx.div_box(t, letters_at(w, iv.a, iv.b));
            if ((beta.bracket_count() + n - 1) % 2) t = ctx.neg(t);
            with = ctx.add(with, t);
        }
        // i'): (1/box_{[1..n]}) sum over bracketings without outer brackets
        //      of Q_beta / box_beta
        typename Ctx::Entry without = ctx.zero();
        for (auto& beta : combin::all_bracketings(n, false)) {
            typename Ctx::Entry t = ctx.one();
            for (auto& iv : beta.brackets) {
                for (int a = iv.a; a <= iv.b; ++a)
                    for (int b = iv.a; b <= iv.b; ++b)
                        if (a != b) t = ctx.mul(t, ctx.var(w[a - 1], w[b - 1]));
                t = ctx.div_box(t, letters_at(w, iv.a, iv.b));
            }
            without = ctx.add(without, t);
        }
        if (n >= 2) without = ctx.div_box(without, letters_at(w, 1, n));
        detail::Memo<Ctx> memo;
        std::vector<Interval> singles;
        for (int i = 1; i <= n; ++i) singles.push_back({i, i});
        typename Ctx::Entry rec = detail::thickened_at(ctx, w, singles, memo);
        if (!ctx.equal(with, without) || !ctx.equal(with, rec))
            throw std::logic_error("identity-coefficient routes disagree");
        return with;
    };
    if (ctx.uniform_words())
        return DiagValue<Ctx>::uniform_of(at_word(basis.weight().letters()));
    DiagValue<Ctx> d;
    for (int i = 0; i < basis.dim(); ++i) d.v.push_back(at_word(basis.word(i)));
    return d;
}

/// Assemble [A^(nu)]^{-1} = sum_g Lambda(g) Q(g) R(g) from the fast
/// per-diagonal algorithm.
template <class Ctx>
GAMatrix<Ctx> inverse_via_lambda(const Ctx& ctx, const Basis& basis) {
    GAMatrix<Ctx> acc(&basis);
    for (auto& g : combin::all_perms(basis.n())) {
        if (!combin::young_sequence(g).tree_like) continue;
        DiagValue<Ctx> lam = lambda_fast(ctx, basis, g);
        typename GAMatrix<Ctx>::Diag d(basis.dim());
        for (int i = 0; i < basis.dim(); ++i)
            d[i] = ctx.mul(lam.at(i), detail::q_of_perm_at(ctx, basis.word(i), g));
        acc.add_diag(ctx, g, d);
    }
    return acc;
}

}  // namespace quongram::invkit
