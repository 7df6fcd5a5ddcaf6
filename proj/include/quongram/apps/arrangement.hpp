#pragma once

#include <boost/rational.hpp>

#include "quongram/detkit/closed.hpp"
#include "quongram/fock/gram.hpp"

namespace quongram::apps {

using combin::Perm;
using detkit::FactoredDet;
using fock::DenseMatrix;
using symring::ParamMode;
using symring::Poly;

using Rational = boost::rational<quongram::Int>;
using RationalWeights = std::map<std::pair<int, int>, Rational>;  // keyed i < j

/// Inversion sets as position-pair sets of the VALUES: the hyperplanes
/// separating two chambers of the braid arrangement.
inline std::vector<std::pair<int, int>> separating_pairs(const Perm& pi, const Perm& tau) {
    auto ia = pi.inverse().inversion_set();
    auto ib = tau.inverse().inversion_set();
    std::vector<std::pair<int, int>> sym;
    for (auto& p : ia)
        if (std::find(ib.begin(), ib.end(), p) == ib.end()) sym.push_back(p);
    for (auto& p : ib)
        if (std::find(ia.begin(), ia.end(), p) == ia.end()) sym.push_back(p);
    std::sort(sym.begin(), sym.end());
    return sym;
}

/// Quantum bilinear form of the discriminant arrangement, the chambers
/// P_pi indexed by one-line permutations. B(P_pi, P_tau) multiplies the
/// weight of every hyperplane x_a = x_b separating the two chambers.
struct ArrangementForm {
    int n;
    DenseMatrix matrix;  // basis word of P_pi is (pi(1), ..., pi(n))
};

inline Poly bform_entry(const Perm& pi, const Perm& tau) {
    Poly e = Poly::one();
    for (auto& [a, b] : separating_pairs(pi, tau))
        e *= Poly::variable(canon_var(ParamMode::real_symmetric, a, b));
    return e;
}

inline ArrangementForm bform(int n) {
    if (n > 5) throw std::invalid_argument("full region matrix supported up to n = 5");
    symring::SymbolicCtx ctx(ParamMode::real_symmetric);
    fock::Basis basis(fock::Weight::generic(n));
    int dim = basis.dim();
    ArrangementForm f{n, DenseMatrix{basis, std::vector<std::vector<symring::RatEntry>>(
                                                dim, std::vector<symring::RatEntry>(
                                                         dim, ctx.zero()))}};
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Perm pi(basis.word(i)), tau(basis.word(j));
            f.matrix.entries[i][j] = ctx.from_poly(bform_entry(pi, tau));
        }
    return f;
}

inline Rational bform_entry_value(const Perm& pi, const Perm& tau, const RationalWeights& w) {
    Rational r(1);
    for (auto& [a, b] : separating_pairs(pi, tau)) {
        auto it = w.find({std::min(a, b), std::max(a, b)});
        if (it == w.end()) throw std::invalid_argument("missing arrangement weight");
        r *= it->second;
    }
    return r;
}

/// det B_n = prod over edges {x_{i1} = ... = x_{ik}}, k >= 2, of
/// (1 - a(L)^2)^{(k-2)!(n-k+1)!}; the box factors of the real-symmetric
/// specialization, enumerated directly over the edge subsets.
inline FactoredDet bform_det(int n) {
    FactoredDet out;
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    for (int k = 2; k <= n; ++k) {
        long long l = 1;
        for (int t = 2; t <= k - 2; ++t) l *= t;
        for (int t = 2; t <= n - k + 1; ++t) l *= t;
        detkit::detail::for_each_subset(all, k, [&](const std::vector<int>& edge) {
            out.push(canon_box(edge, ParamMode::real_symmetric), l);
        });
    }
    return out;
}

/// Exact value of the factored determinant at rational weights.
inline Rational bform_det_value(int n, const RationalWeights& w) {
    Rational det(1);
    for (auto& [f, e] : bform_det(n).factors) {
        Rational a(1);
        for (std::size_t x = 0; x < f.support.size(); ++x)
            for (std::size_t y = x + 1; y < f.support.size(); ++y)
                a *= w.at({f.support[x], f.support[y]});
        Rational factor = Rational(1) - a * a;
        for (long long t = 0; t < e; ++t) det *= factor;
    }
    return det;
}

}  // namespace quongram::apps
