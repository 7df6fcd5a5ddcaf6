#pragma once

#include <map>

#include "quongram/combin/bracketing.hpp"
#include "quongram/fock/factor.hpp"

namespace quongram::invkit {

using combin::Bracketing;
using combin::Interval;
using combin::Perm;
using fock::Basis;
using fock::GAMatrix;
using fock::Word;

/// Letters occupying positions a..b of a word.
inline std::vector<int> letters_at(const Word& w, int a, int b) {
    return std::vector<int>(w.begin() + (a - 1), w.begin() + b);
}

/// Psi_{[a..b]} = (1/box_{[a..b]}) (I - (-1)^{b-a+1} R^hat(w_{[a..b]})).
/// This is the closed-form inverse of I + (-1)^{b-a+1} R^hat(w_{[a..b]}).
template <class Ctx>
GAMatrix<Ctx> psi(const Ctx& ctx, const Basis& basis, int a, int b) {
    GAMatrix<Ctx> m(&basis);
    int len = b - a + 1;
    Perm w_ab = combin::w_interval(basis.n(), a, b);
    typename GAMatrix<Ctx>::Diag d_id(basis.dim()), d_w(basis.dim());
    auto qw = fock::qdiag_of_perm(ctx, basis, w_ab);
    for (int i = 0; i < basis.dim(); ++i) {
        auto support = letters_at(basis.word(i), a, b);
        d_id[i] = ctx.div_box(ctx.one(), support);
        typename Ctx::Entry t = ctx.div_box(qw[i], support);
        d_w[i] = (len % 2 == 0) ? ctx.neg(t) : t;  // -(-1)^{len} t
    }
    m.add_diag(ctx, Perm::identity(basis.n()), d_id);
    m.add_diag(ctx, w_ab, d_w);
    return m;
}

/// A^(nu)_{[a..b]} = sum over the interval's symmetric group of R^hat(g).
template <class Ctx>
GAMatrix<Ctx> gram_interval(const Ctx& ctx, const Basis& basis, int a, int b) {
    GAMatrix<Ctx> acc(&basis);
    std::vector<int> vals(b - a + 1);
    std::iota(vals.begin(), vals.end(), a);
    do {
        std::vector<int> img(basis.n());
        std::iota(img.begin(), img.end(), 1);
        for (int k = a; k <= b; ++k) img[k - 1] = vals[k - a];
        Perm g{std::move(img)};
        acc.add_diag(ctx, g, fock::qdiag_of_perm(ctx, basis, g));
    } while (std::next_permutation(vals.begin(), vals.end()));
    return acc;
}

/// Gamma_J = sum of R^hat(g) over permutations with descent set inside J.
template <class Ctx>
GAMatrix<Ctx> gamma_factor(const Ctx& ctx, const Basis& basis, const std::set<int>& J) {
    GAMatrix<Ctx> acc(&basis);
    for (auto& g : combin::all_perms(basis.n())) {
        auto des = g.descent_set();
        if (std::includes(J.begin(), J.end(), des.begin(), des.end()))
            acc.add_diag(ctx, g, fock::qdiag_of_perm(ctx, basis, g));
    }
    return acc;
}

/// Factorization A = Gamma_J A_J.
template <class Ctx>
bool gamma_factorization_holds(const Ctx& ctx, const Basis& basis, const std::set<int>& J) {
    GAMatrix<Ctx> aj = GAMatrix<Ctx>::identity(ctx, basis);
    int start = 1;
    auto flush = [&](int end) {
        if (end > start) aj = aj.times(ctx, gram_interval(ctx, basis, start, end));
        start = end + 1;
    };
    for (int j : J) flush(j);
    flush(basis.n());
    return gamma_factor(ctx, basis, J).times(ctx, aj).equals(ctx, fock::gram_ga(ctx, basis));
}

/// Euler/Solomon alternating sum: sum_J (-1)^{n-1-|J|} Gamma_J = R^hat(w_n).
template <class Ctx>
bool euler_solomon_check(const Ctx& ctx, const Basis& basis) {
    int n = basis.n();
    GAMatrix<Ctx> acc(&basis);
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::set<int> J;
        for (int i = 0; i < n - 1; ++i)
            if (mask & (1u << i)) J.insert(i + 1);
        auto g = gamma_factor(ctx, basis, J);
        if ((n - 1 - static_cast<int>(J.size())) % 2) g = g.negated(ctx);
        acc = acc.plus(ctx, g);
    }
    return acc.equals(ctx, rhat(ctx, basis, combin::longest_perm(n)));
}

/// The chain/bracketing inversion formula:
/// [A^(nu)]^{-1} = sum over bracketings beta with outer bracket of
/// (-1)^{b(beta)+n-1} Psi_beta, the Psi factors multiplied finest first.
template <class Ctx>
GAMatrix<Ctx> inverse_chain(const Ctx& ctx, const Basis& basis) {
    int n = basis.n();
    GAMatrix<Ctx> acc(&basis);
    if (n == 1) return GAMatrix<Ctx>::identity(ctx, basis);
    for (auto& beta : combin::all_bracketings(n, /*with_outer=*/true)) {
        GAMatrix<Ctx> term = GAMatrix<Ctx>::identity(ctx, basis);
        for (auto& iv : beta.by_depth_desc()) term = term.times(ctx, psi(ctx, basis, iv.a, iv.b));
        if ((beta.bracket_count() + n - 1) % 2) term = term.negated(ctx);
        acc = acc.plus(ctx, term);
    }
    return acc;
}

enum class RecursionKind { long_form, short_form };

namespace detail {

template <class Ctx>
GAMatrix<Ctx> inverse_interval(const Ctx& ctx, const Basis& basis, int a, int b,
                               RecursionKind kind,
                               std::map<std::pair<int, int>, GAMatrix<Ctx>>& memo) {
    if (a == b) return GAMatrix<Ctx>::identity(ctx, basis);
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    GAMatrix<Ctx> sum(&basis);
    if (kind == RecursionKind::long_form) {
        // over nonempty interior cut sets of [a..b]
        int bits = b - a;
        for (unsigned mask = 1; mask < (1u << bits); ++mask) {
            GAMatrix<Ctx> prod = GAMatrix<Ctx>::identity(ctx, basis);
            int start = a, cuts = 0;
            for (int i = 0; i < bits; ++i) {
                if (!(mask & (1u << i))) continue;
                ++cuts;
                prod = prod.times(ctx, inverse_interval(ctx, basis, start, a + i, kind, memo));
                start = a + i + 1;
            }
            prod = prod.times(ctx, inverse_interval(ctx, basis, start, b, kind, memo));
            if (cuts % 2 == 0) prod = prod.negated(ctx);  // (-1)^{|J|+1}
            sum = sum.plus(ctx, prod);
        }
    } else {
        for (int k = a; k < b; ++k) {
            GAMatrix<Ctx> prod =
                inverse_interval(ctx, basis, a, k, kind, memo)
                    .times(ctx, inverse_interval(ctx, basis, k + 1, b, kind, memo))
                    .times(ctx, rhat(ctx, basis, combin::w_interval(basis.n(), a, k)));
            if ((k - a) % 2) prod = prod.negated(ctx);
            sum = sum.plus(ctx, prod);
        }
    }
    GAMatrix<Ctx> result = sum.times(ctx, psi(ctx, basis, a, b));
    memo.emplace(std::make_pair(a, b), result);
    return result;
}

}  // namespace detail

/// Long or short recursion for the inverse; both agree with inverse_chain.
template <class Ctx>
GAMatrix<Ctx> recursion_step(const Ctx& ctx, const Basis& basis, RecursionKind kind) {
    std::map<std::pair<int, int>, GAMatrix<Ctx>> memo;
    return detail::inverse_interval(ctx, basis, 1, basis.n(), kind, memo);
}

/// Number of Psi-terms the chain formula sums (one per bracketing).
inline std::size_t inverse_chain_term_count(int n) {
    if (n == 1) return 1;
    return combin::all_bracketings(n, true).size();
}

}  // namespace quongram::invkit
