#pragma once

#include <random>
#include <stdexcept>
#include <vector>

#include "quongram/detkit/factored.hpp"
#include "quongram/fock/gram.hpp"

namespace quongram::detkit {

using quongram::Int;

/// Fraction-free Bareiss elimination over Z[q_ij]; every division is exact.
/// Symbolic oracle; dimension capped.
inline symring::Poly det_bareiss(std::vector<std::vector<symring::Poly>> m,
                                 int dim_cap = 24) {
    using symring::Poly;
    int n = static_cast<int>(m.size());
    if (n > dim_cap) throw std::invalid_argument("symbolic determinant dimension cap exceeded");
    if (n == 0) return Poly::one();
    Poly prev = Poly::one();
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        // pivot on the sparsest nonzero entry of the column to limit fill-in
        int swap_row = -1;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (int r = k; r < n; ++r)
            if (!m[r][k].is_zero() && m[r][k].term_count() < best) {
                best = m[r][k].term_count();
                swap_row = r;
            }
        if (swap_row < 0) return Poly::zero();
        if (swap_row != k) {
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Poly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = num.divided_by(prev);
                if (!q) throw std::logic_error("Bareiss division not exact");
                m[i][j] = std::move(*q);
            }
        for (int i = k + 1; i < n; ++i) m[i][k] = Poly::zero();
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    if (sign < 0) d = -d;
    return d;
}

/// Gaussian elimination determinant over Z/p.
inline std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>> m, const symring::Zp& zp) {
    int n = static_cast<int>(m.size());
    std::uint64_t det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = zp.sub(0, det);
        }
        det = zp.mul(det, m[k][k]);
        std::uint64_t inv = zp.inv(m[k][k]);
        for (int r = k + 1; r < n; ++r) {
            if (m[r][k] == 0) continue;
            std::uint64_t f = zp.mul(m[r][k], inv);
            for (int c = k; c < n; ++c) m[r][c] = zp.sub(m[r][c], zp.mul(f, m[k][c]));
        }
    }
    return det;
}

inline std::vector<std::vector<symring::Poly>> poly_grid(const fock::DenseMatrix& m) {
    std::vector<std::vector<symring::Poly>> g(m.dim(), std::vector<symring::Poly>(m.dim()));
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) g[i][j] = m.poly_at(i, j);
    return g;
}

inline symring::Poly det_bruteforce(const fock::DenseMatrix& m, int dim_cap = 24) {
    return det_bareiss(poly_grid(m), dim_cap);
}

/// Schwartz-Zippel verdict: does det(matrix) agree with the candidate
/// factored determinant at `trials` random points for each prime?
/// The matrix is rebuilt per evaluation by the supplied entry functional.
inline bool det_matches_modular(
    const fock::Weight& nu, ParamMode mode, const FactoredDet& candidate,
    const std::function<std::uint64_t(const symring::ModPoint&, const fock::Basis&, int, int)>&
        entry,
    const std::vector<std::uint64_t>& primes, int trials, std::uint64_t seed) {
    fock::Basis basis(nu);
    std::mt19937_64 rng(seed);
    for (std::uint64_t p : primes) {
        for (int t = 0; t < trials; ++t) {
            auto pt = symring::ModPoint::random(mode, nu.max_label(), p, rng);
            std::vector<std::vector<std::uint64_t>> g(
                basis.dim(), std::vector<std::uint64_t>(basis.dim()));
            for (int i = 0; i < basis.dim(); ++i)
                for (int j = 0; j < basis.dim(); ++j) g[i][j] = entry(pt, basis, i, j);
            if (det_mod(std::move(g), pt.zp) != candidate.eval(pt)) return false;
        }
    }
    return true;
}

/// Convenience: modular comparison of the Gram determinant with a candidate.
inline bool gram_det_matches(const fock::Weight& nu, ParamMode mode, const FactoredDet& candidate,
                             const std::vector<std::uint64_t>& primes, int trials,
                             std::uint64_t seed) {
    return det_matches_modular(
        nu, mode, candidate,
        [](const symring::ModPoint& pt, const fock::Basis& b, int i, int j) {
            symring::ModularCtx ctx{pt};
            return fock::gram_entry(ctx, b.word(i), b.word(j));
        },
        primes, trials, seed);
}

}  // namespace quongram::detkit
