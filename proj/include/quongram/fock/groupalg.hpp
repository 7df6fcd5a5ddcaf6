#pragma once

#include <map>
#include <vector>

#include "quongram/combin/perm.hpp"
#include "quongram/fock/weight.hpp"
#include "quongram/symring/entry.hpp"

namespace quongram::fock {

using combin::Perm;

/// Matrix on a weight-space basis stored as its g-th diagonals:
/// M = sum_g diag(D_g) R(g) with R(g)_{i,j} = [i == g.j].
/// Entries live in the ring supplied by Ctx.
template <class Ctx>
class GAMatrix {
  public:
    using Entry = typename Ctx::Entry;
    using Diag = std::vector<Entry>;

    explicit GAMatrix(const Basis* basis) : basis_(basis) {}

    static GAMatrix identity(const Ctx& ctx, const Basis& basis) {
        GAMatrix m(&basis);
        m.diags_[Perm::identity(basis.n())] = Diag(basis.dim(), ctx.one());
        return m;
    }

    const Basis& basis() const { return *basis_; }
    const std::map<Perm, Diag>& diagonals() const { return diags_; }
    bool empty() const { return diags_.empty(); }

    void add_diag(const Ctx& ctx, const Perm& g, const Diag& d) {
        auto it = diags_.find(g);
        if (it == diags_.end()) {
            diags_.emplace(g, d);
            it = diags_.find(g);
        } else {
            for (int i = 0; i < basis_->dim(); ++i) it->second[i] = ctx.add(it->second[i], d[i]);
        }
        prune(ctx, it);
    }

    GAMatrix plus(const Ctx& ctx, const GAMatrix& o) const {
        GAMatrix r = *this;
        for (auto& [g, d] : o.diags_) r.add_diag(ctx, g, d);
        return r;
    }

    GAMatrix minus(const Ctx& ctx, const GAMatrix& o) const {
        GAMatrix r = *this;
        for (auto& [g, d] : o.diags_) {
            Diag nd = d;
            for (auto& e : nd) e = ctx.neg(e);
            r.add_diag(ctx, g, nd);
        }
        return r;
    }

    /// Crossed-product multiplication:
    /// (D1 R(g1))(D2 R(g2)) = [D1 . (g1 D2)] R(g1 g2),  (g1 D2)_w = D2_{g1^{-1} w}.
    GAMatrix times(const Ctx& ctx, const GAMatrix& o) const {
        GAMatrix r(basis_);
        int dim = basis_->dim();
        for (auto& [g1, d1] : diags_) {
            const std::vector<int>& tbl = basis_->action_table(g1.inverse());
            for (auto& [g2, d2] : o.diags_) {
                Perm g = g1 * g2;
                Diag nd(dim);
                for (int i = 0; i < dim; ++i) nd[i] = ctx.mul(d1[i], d2[tbl[i]]);
                r.add_diag(ctx, g, nd);
            }
        }
        return r;
    }

    GAMatrix scaled_by_diag(const Ctx& ctx, const Diag& d) const {  // diag(d) * this
        GAMatrix r(basis_);
        for (auto& [g, dg] : diags_) {
            Diag nd(basis_->dim());
            for (int i = 0; i < basis_->dim(); ++i) nd[i] = ctx.mul(d[i], dg[i]);
            r.add_diag(ctx, g, nd);
        }
        return r;
    }

    GAMatrix negated(const Ctx& ctx) const {
        GAMatrix r = *this;
        for (auto& [g, d] : r.diags_)
            for (auto& e : d) e = ctx.neg(e);
        return r;
    }

    bool equals(const Ctx& ctx, const GAMatrix& o) const {
        for (auto& [g, d] : diags_) {
            auto it = o.diags_.find(g);
            for (int i = 0; i < basis_->dim(); ++i) {
                const Entry& other = it == o.diags_.end() ? ctx.zero() : it->second[i];
                if (!ctx.equal(d[i], other)) return false;
            }
        }
        for (auto& [g, d] : o.diags_) {
            if (diags_.count(g)) continue;
            for (auto& e : d)
                if (!ctx.is_zero(e)) return false;
        }
        return true;
    }

    bool is_identity(const Ctx& ctx) const {
        return equals(ctx, identity(ctx, *basis_));
    }

    std::vector<std::vector<Entry>> dense(const Ctx& ctx) const {
        int dim = basis_->dim();
        std::vector<std::vector<Entry>> m(dim, std::vector<Entry>(dim, ctx.zero()));
        for (auto& [g, d] : diags_) {
            const std::vector<int>& tbl = basis_->action_table(g);
            for (int j = 0; j < dim; ++j) {
                int i = tbl[j];
                m[i][j] = ctx.add(m[i][j], d[i]);
            }
        }
        return m;
    }

    Diag diag_of(const Ctx& ctx, const Perm& g) const {
        auto it = diags_.find(g);
        if (it != diags_.end()) return it->second;
        return Diag(basis_->dim(), ctx.zero());
    }

    /// Drop diagonals that became identically zero.
    void prune_all(const Ctx& ctx) {
        for (auto it = diags_.begin(); it != diags_.end();) {
            bool zero = true;
            for (auto& e : it->second) zero = zero && ctx.is_zero(e);
            it = zero ? diags_.erase(it) : std::next(it);
        }
    }

  private:
    void prune(const Ctx& ctx, typename std::map<Perm, Diag>::iterator it) {
        for (auto& e : it->second)
            if (!ctx.is_zero(e)) return;
        diags_.erase(it);
    }

    const Basis* basis_;
    std::map<Perm, Diag> diags_;
};

/// Diagonal of Q^nu(g): value at word w is q_{w,g^{-1}} = prod over
/// inversions (a,b) of g^{-1} of q_{w_a w_b}.
template <class Ctx>
std::vector<typename Ctx::Entry> qdiag_of_perm(const Ctx& ctx, const Basis& basis,
                                               const Perm& g) {
    auto inv = g.inverse().inversion_set();
    std::vector<typename Ctx::Entry> d(basis.dim(), ctx.one());
    for (int i = 0; i < basis.dim(); ++i) {
        const Word& w = basis.word(i);
        for (auto& [a, b] : inv) d[i] = ctx.mul(d[i], ctx.var(w[a - 1], w[b - 1]));
    }
    return d;
}

/// Q^nu_{{a,b}} = Q_{a,b} Q_{b,a}: value q_{w_a w_b} q_{w_b w_a}.
template <class Ctx>
std::vector<typename Ctx::Entry> qdiag_pair(const Ctx& ctx, const Basis& basis, int a, int b) {
    std::vector<typename Ctx::Entry> d(basis.dim(), ctx.one());
    for (int i = 0; i < basis.dim(); ++i) {
        const Word& w = basis.word(i);
        d[i] = ctx.mul(ctx.var(w[a - 1], w[b - 1]), ctx.var(w[b - 1], w[a - 1]));
    }
    return d;
}

/// Q^nu_T over a set of positions: all ordered pairs of distinct positions.
template <class Ctx>
std::vector<typename Ctx::Entry> qdiag_positions(const Ctx& ctx, const Basis& basis,
                                                 const std::vector<int>& positions) {
    std::vector<typename Ctx::Entry> d(basis.dim(), ctx.one());
    for (int i = 0; i < basis.dim(); ++i) {
        const Word& w = basis.word(i);
        for (int a : positions)
            for (int b : positions)
                if (a != b) d[i] = ctx.mul(d[i], ctx.var(w[a - 1], w[b - 1]));
    }
    return d;
}

/// The projective regular representation R^hat_nu(g) = Q^nu(g) R_nu(g);
/// requires a generic weight.
template <class Ctx>
GAMatrix<Ctx> rhat(const Ctx& ctx, const Basis& basis, const Perm& g) {
    if (!basis.weight().is_generic())
        throw std::invalid_argument("rhat requires a generic weight");
    GAMatrix<Ctx> m(&basis);
    m.add_diag(ctx, g, qdiag_of_perm(ctx, basis, g));
    return m;
}

/// Cocycle M_nu(g1,g2) with R^hat(g1) R^hat(g2) = M R^hat(g1 g2):
/// product of Q_{{g1(a),g1(b)}} over (a,b) in I(g1) cap I(g2^{-1}).
template <class Ctx>
std::vector<typename Ctx::Entry> cocycle(const Ctx& ctx, const Basis& basis, const Perm& g1,
                                         const Perm& g2) {
    auto i1 = g1.inversion_set();
    auto i2 = g2.inverse().inversion_set();
    std::vector<typename Ctx::Entry> d(basis.dim(), ctx.one());
    for (auto& [a, b] : i1) {
        if (std::find(i2.begin(), i2.end(), std::make_pair(a, b)) == i2.end()) continue;
        int c = g1(a), e = g1(b);
        for (int i = 0; i < basis.dim(); ++i) {
            const Word& w = basis.word(i);
            d[i] = ctx.mul(d[i], ctx.mul(ctx.var(w[c - 1], w[e - 1]), ctx.var(w[e - 1], w[c - 1])));
        }
    }
    return d;
}

}  // namespace quongram::fock
