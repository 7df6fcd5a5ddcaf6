#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "quongram/fock/groupalg.hpp"
#include "quongram/fock/wordpoly.hpp"

namespace quongram::fock {

using symring::RatEntry;
using symring::SymbolicCtx;

/// Dense matrix on a labeled word basis.
struct DenseMatrix {
    Basis basis;
    std::vector<std::vector<RatEntry>> entries;

    int dim() const { return basis.dim(); }

    const symring::Poly& poly_at(int i, int j) const {
        if (!entries[i][j].den.empty())
            throw std::logic_error("entry has a nontrivial denominator");
        return entries[i][j].num;
    }

    bool is_hermitian(const SymbolicCtx& ctx) const {
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (!ctx.equal(entries[i][j], ctx.conj(entries[j][i]))) return false;
        return true;
    }
};

enum class GramRoute { direct, derivative, rsum };

namespace detail {

/// All permutations sigma with sigma . i = j, i.e. i_{sigma^{-1}(p)} = j_p.
inline std::vector<Perm> matching_perms(const Word& wi, const Word& wj) {
    int n = static_cast<int>(wi.size());
    std::map<int, std::vector<int>> positions;  // letter -> positions in wi (1-based)
    for (int p = 1; p <= n; ++p) positions[wi[p - 1]].push_back(p);
    std::vector<Perm> out;
    std::vector<int> siginv(n);  // sigma^{-1}(p)
    std::map<int, int> used;     // letter -> how many positions consumed
    std::function<void(int)> rec = [&](int p) {
        if (p > n) {
            std::vector<int> sigma(n);
            for (int t = 1; t <= n; ++t) sigma[siginv[t - 1] - 1] = t;
            out.push_back(Perm(std::move(sigma)));
            return;
        }
        auto it = positions.find(wj[p - 1]);
        if (it == positions.end()) return;
        auto& pos = it->second;
        // choose an unused position of this letter; iterate all assignments
        std::vector<bool> taken(pos.size(), false);
        // mark positions already assigned in siginv[0..p-2]
        for (int t = 1; t < p; ++t)
            for (std::size_t k = 0; k < pos.size(); ++k)
                if (siginv[t - 1] == pos[k]) taken[k] = true;
        for (std::size_t k = 0; k < pos.size(); ++k) {
            if (taken[k]) continue;
            siginv[p - 1] = pos[k];
            rec(p + 1);
        }
    };
    rec(1);
    return out;
}

/// q_{w,sigma} = prod over inversions (a,b) of sigma of q_{w_a w_b}.
template <class Ctx>
typename Ctx::Entry q_word_perm(const Ctx& ctx, const Word& w, const Perm& sigma) {
    typename Ctx::Entry e = ctx.one();
    for (auto& [a, b] : sigma.inversion_set()) e = ctx.mul(e, ctx.var(w[a - 1], w[b - 1]));
    return e;
}

}  // namespace detail

/// Gram matrix entry A_{i,j} by the inversion-monomial formula: the sum of
/// q_{i,sigma} over all sigma with sigma . i = j (a single term when the
/// weight is generic). Summing q_{i,sigma^{-1}} instead is wrong: on the
/// weight 1+1+3 it yields q13 + q13^2 where row one of the matrix must read
/// q13 + q11 q13.
template <class Ctx>
typename Ctx::Entry gram_entry(const Ctx& ctx, const Word& wi, const Word& wj) {
    typename Ctx::Entry e = ctx.zero();
    for (auto& sigma : detail::matching_perms(wi, wj))
        e = ctx.add(e, detail::q_word_perm(ctx, wi, sigma));
    return e;
}

/// Gram matrix of the weight space by one of three routes; all agree.
inline DenseMatrix gram(const SymbolicCtx& ctx, const Weight& nu,
                        GramRoute route = GramRoute::direct) {
    Basis basis(nu);
    int dim = basis.dim();
    DenseMatrix m{basis, std::vector<std::vector<RatEntry>>(
                             dim, std::vector<RatEntry>(dim, ctx.zero()))};
    switch (route) {
        case GramRoute::direct: {
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j)
                    m.entries[i][j] = gram_entry(ctx, basis.word(i), basis.word(j));
            break;
        }
        case GramRoute::derivative: {
            // A_{i,j} = scalar part of  i_n d ... i_1 d (th_j)
            for (int i = 0; i < dim; ++i) {
                const Word& wi = basis.word(i);
                for (int j = 0; j < dim; ++j) {
                    WordPoly x = WordPoly::of_word(basis.word(j));
                    for (int p = 0; p < basis.n(); ++p)
                        x = deformed_partial(Side::left, wi[p], x);
                    m.entries[i][j] = ctx.from_poly(x.coefficient(Word{}).specialized(ctx.mode()));
                }
            }
            break;
        }
        case GramRoute::rsum: {
            if (!nu.is_generic())
                throw std::invalid_argument("rsum route requires a generic weight");
            GAMatrix<SymbolicCtx> acc(&m.basis);
            for (auto& g : combin::all_perms(nu.n()))
                acc.add_diag(ctx, g, qdiag_of_perm(ctx, m.basis, g));
            m.entries = acc.dense(ctx);
            break;
        }
    }
    return m;
}

/// The full A^(nu) in group-algebra form (generic weights), per Prop-style
/// row sum over the projective representation.
template <class Ctx>
GAMatrix<Ctx> gram_ga(const Ctx& ctx, const Basis& basis) {
    if (!basis.weight().is_generic())
        throw std::invalid_argument("group-algebra Gram form requires a generic weight");
    GAMatrix<Ctx> acc(&basis);
    for (auto& g : combin::all_perms(basis.n()))
        acc.add_diag(ctx, g, qdiag_of_perm(ctx, basis, g));
    return acc;
}

}  // namespace quongram::fock
