#pragma once

#include "quongram/fock/gram.hpp"
#include "quongram/invkit/lambda.hpp"

namespace quongram::invkit {

using fock::DenseMatrix;
using fock::Weight;
using symring::RatEntry;
using symring::SymbolicCtx;

namespace detail {

/// Tilde lift of a word: the k-th occurrence of the m-th smallest letter
/// gets the k-th label of that letter's fiber.
inline Word lift_word(const Word& w, const std::vector<std::vector<int>>& fiber_of_letter,
                      const std::map<int, int>& letter_slot) {
    std::map<int, int> used;
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        int slot = letter_slot.at(l);
        out.push_back(fiber_of_letter[slot][used[l]++]);
    }
    return out;
}

}  // namespace detail

/// Inverse of a (possibly degenerate) Gram matrix by reduction to the
/// generic lift: [A^(nu)]^{-1}_{i,j} = sum over lifts jt of j of
/// [At^{-1}]_{it, jt}, with the lifted parameters identified along the
/// fibers. Generic weights reduce to the plain fast-diagonal assembly.
inline DenseMatrix degenerate_inverse(const SymbolicCtx& ctx, const Weight& nu) {
    if (nu.n() > 6) throw std::invalid_argument("degenerate inverse supported up to |nu| = 6");
    int n = nu.n();

    // fibers: tilde labels 1..n grouped by original letter
    std::vector<std::vector<int>> fibers;
    std::map<int, int> letter_slot;
    std::vector<int> phi(n + 1);  // tilde label -> original letter
    {
        int next = 1;
        for (auto& [letter, mult] : nu.multiplicities()) {
            letter_slot[letter] = static_cast<int>(fibers.size());
            fibers.push_back({});
            for (int k = 0; k < mult; ++k) {
                fibers.back().push_back(next);
                phi[next] = letter;
                ++next;
            }
        }
    }

    SymbolicCtx lifted_ctx(symring::ParamMode::multi);
    fock::Basis tilde_basis(Weight::generic(n));
    GAMatrix<SymbolicCtx> tilde_inv = inverse_via_lambda(lifted_ctx, tilde_basis);
    auto tilde_dense = tilde_inv.dense(lifted_ctx);

    // identify parameters along the fibers: q_{ab} -> q_{phi(a) phi(b)}
    auto rename = [&](const RatEntry& e) {
        RatEntry r;
        r.num = e.num.mapped([&](symring::ParamVar v) {
            return canon_var(ctx.mode(), phi[v.row], phi[v.col]);
        });
        for (auto& [f, m] : e.den.factors) {
            std::vector<int> support;
            for (int s : f.support) support.push_back(phi[s]);
            r.den.push(canon_box(support, ctx.mode()), m);
        }
        return ctx.reduced(r);
    };

    fock::Basis basis(nu);
    int dim = basis.dim();
    DenseMatrix out{basis,
                    std::vector<std::vector<RatEntry>>(dim, std::vector<RatEntry>(dim, ctx.zero()))};
    for (int i = 0; i < dim; ++i) {
        Word it = detail::lift_word(basis.word(i), fibers, letter_slot);
        int iti = tilde_basis.index(it);
        for (int j = 0; j < dim; ++j) {
            RatEntry acc = ctx.zero();
            for (int jt = 0; jt < tilde_basis.dim(); ++jt) {
                const Word& cand = tilde_basis.word(jt);
                bool projects = true;
                for (int p = 0; p < n && projects; ++p)
                    projects = phi[cand[p]] == basis.word(j)[p];
                if (!projects) continue;
                acc = ctx.add(acc, rename(tilde_dense[iti][jt]));
            }
            out.entries[i][j] = acc;
        }
    }
    return out;
}

}  // namespace quongram::invkit
