#pragma once

#include "quongram/fock/gram.hpp"

namespace quongram::fock {

/// A^(nu),m = R^hat(t_{1,m}) + ... + R^hat(t_{m,m});  A^(nu),1 = I and the
/// ordered product A^(nu),1 ... A^(nu),n recovers the Gram matrix.
template <class Ctx>
GAMatrix<Ctx> cyclic_factor(const Ctx& ctx, const Basis& basis, int m) {
    GAMatrix<Ctx> acc(&basis);
    for (int k = 1; k <= m; ++k) {
        Perm t = combin::cycle_t(basis.n(), k, m);
        acc.add_diag(ctx, t, qdiag_of_perm(ctx, basis, t));
    }
    return acc;
}

template <class Ctx>
std::vector<GAMatrix<Ctx>> cyclic_factors(const Ctx& ctx, const Basis& basis) {
    std::vector<GAMatrix<Ctx>> out;
    for (int m = 1; m <= basis.n(); ++m) out.push_back(cyclic_factor(ctx, basis, m));
    return out;
}

/// C^(nu),m = prod_{k=1}^{m-1} [I - R^hat(t_{k,m})]   (2 <= m <= n)
template <class Ctx>
GAMatrix<Ctx> c_factor(const Ctx& ctx, const Basis& basis, int m) {
    if (m < 2 || m > basis.n()) throw std::out_of_range("c_factor index");
    GAMatrix<Ctx> acc = GAMatrix<Ctx>::identity(ctx, basis);
    for (int k = 1; k <= m - 1; ++k)
        acc = acc.times(ctx, GAMatrix<Ctx>::identity(ctx, basis)
                                 .minus(ctx, rhat(ctx, basis, combin::cycle_t(basis.n(), k, m))));
    return acc;
}

/// D^(nu),m = prod_{k=1}^{m} [I - Q_{{m,m+1}} R^hat(t_{k,m})]   (1 <= m < n)
template <class Ctx>
GAMatrix<Ctx> d_factor(const Ctx& ctx, const Basis& basis, int m) {
    if (m < 1 || m >= basis.n()) throw std::out_of_range("d_factor index");
    auto qpair = qdiag_pair(ctx, basis, m, m + 1);
    GAMatrix<Ctx> acc = GAMatrix<Ctx>::identity(ctx, basis);
    for (int k = 1; k <= m; ++k) {
        GAMatrix<Ctx> term =
            rhat(ctx, basis, combin::cycle_t(basis.n(), k, m)).scaled_by_diag(ctx, qpair);
        acc = acc.times(ctx, GAMatrix<Ctx>::identity(ctx, basis).minus(ctx, term));
    }
    return acc;
}

/// The pair (C^(nu),m, D^(nu),m-1) tied by A^(nu),m C^(nu),m = D^(nu),m-1.
template <class Ctx>
struct CDFactors {
    GAMatrix<Ctx> C;
    GAMatrix<Ctx> D;  // index m-1
};

template <class Ctx>
CDFactors<Ctx> cd_factors(const Ctx& ctx, const Basis& basis, int m) {
    return {c_factor(ctx, basis, m), d_factor(ctx, basis, m - 1)};
}

template <class Ctx>
bool cd_identity_holds(const Ctx& ctx, const Basis& basis, int m) {
    auto cd = cd_factors(ctx, basis, m);
    return cyclic_factor(ctx, basis, m).times(ctx, cd.C).equals(ctx, cd.D);
}

/// Commutation rule i): R^hat(t_{a',m}) R^hat(t_{a,m}) =
/// Q_{{m-1,m}} R^hat(t_{a,m-1}) R^hat(t_{a'+1,m}),  1 <= a <= a' < m <= n.
template <class Ctx>
bool property3_cyclic(const Ctx& ctx, const Basis& basis, int a, int ap, int m) {
    int n = basis.n();
    auto lhs = rhat(ctx, basis, combin::cycle_t(n, ap, m))
                   .times(ctx, rhat(ctx, basis, combin::cycle_t(n, a, m)));
    auto rhs = rhat(ctx, basis, combin::cycle_t(n, a, m - 1))
                   .times(ctx, rhat(ctx, basis, combin::cycle_t(n, ap + 1, m)))
                   .scaled_by_diag(ctx, qdiag_pair(ctx, basis, m - 1, m));
    return lhs.equals(ctx, rhs);
}

/// Longest-element rule ii): R^hat(g w_n) R^hat(w_n) = R^hat(w_n) R^hat(w_n g)
/// = (prod_{a<b, g^{-1}(a)<g^{-1}(b)} Q_{{a,b}}) R^hat(g).
template <class Ctx>
bool property3_longest(const Ctx& ctx, const Basis& basis, const Perm& g) {
    int n = basis.n();
    Perm wn = combin::longest_perm(n);
    auto lhs1 = rhat(ctx, basis, g * wn).times(ctx, rhat(ctx, basis, wn));
    auto lhs2 = rhat(ctx, basis, wn).times(ctx, rhat(ctx, basis, wn * g));
    Perm ginv = g.inverse();
    typename GAMatrix<Ctx>::Diag factor(basis.dim(), ctx.one());
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            if (ginv(a) >= ginv(b)) continue;
            auto qp = qdiag_pair(ctx, basis, a, b);
            for (int i = 0; i < basis.dim(); ++i) factor[i] = ctx.mul(factor[i], qp[i]);
        }
    auto rhs = rhat(ctx, basis, g).scaled_by_diag(ctx, factor);
    return lhs1.equals(ctx, rhs) && lhs2.equals(ctx, rhs);
}

/// Both commutation rules, the first over every triple in range.
template <class Ctx>
bool property3_check(const Ctx& ctx, const Basis& basis, const Perm& g) {
    if (!property3_longest(ctx, basis, g)) return false;
    for (int m = 2; m <= basis.n(); ++m)
        for (int a = 1; a < m; ++a)
            for (int ap = a; ap < m; ++ap)
                if (!property3_cyclic(ctx, basis, a, ap, m)) return false;
    return true;
}

}  // namespace quongram::fock
