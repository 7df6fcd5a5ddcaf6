#pragma once

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <stdexcept>

#include "quongram/fock/weight.hpp"

namespace quongram::detkit {

enum class PdVerdict { positive_definite, not_positive_definite, indeterminate };

inline const char* pd_verdict_name(PdVerdict v) {
    switch (v) {
        case PdVerdict::positive_definite: return "positive-definite";
        case PdVerdict::not_positive_definite: return "not-positive-definite";
        case PdVerdict::indeterminate: return "indeterminate";
    }
    return "?";
}

using ComplexAssignment = std::map<std::pair<int, int>, std::complex<double>>;

inline std::complex<double> assignment_value(const ComplexAssignment& a, int i, int j) {
    auto it = a.find({i, j});
    if (it != a.end()) return it->second;
    auto jt = a.find({j, i});
    if (jt != a.end()) return std::conj(jt->second);
    throw std::invalid_argument("assignment misses q_{" + std::to_string(i) + "," +
                                std::to_string(j) + "}");
}

inline bool assignment_hermitian(const ComplexAssignment& a, int max_label, double tol = 1e-12) {
    for (int i = 1; i <= max_label; ++i)
        for (int j = 1; j <= max_label; ++j) {
            auto it = a.find({i, j});
            auto jt = a.find({j, i});
            if (it != a.end() && jt != a.end() &&
                std::abs(it->second - std::conj(jt->second)) > tol)
                return false;
        }
    return true;
}

/// Numeric Gram matrix at a hermitian parameter point.
inline Eigen::MatrixXcd gram_numeric(const fock::Weight& nu, const ComplexAssignment& a) {
    fock::Basis basis(nu);
    int dim = basis.dim();
    Eigen::MatrixXcd m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const fock::Word& wi = basis.word(i);
            const fock::Word& wj = basis.word(j);
            std::complex<double> acc = 0.0;
            for (auto& sigma : fock::detail::matching_perms(wi, wj)) {
                std::complex<double> t = 1.0;
                for (auto& [p, q] : sigma.inversion_set())
                    t *= assignment_value(a, wi[p - 1], wi[q - 1]);
                acc += t;
            }
            m(i, j) = acc;
        }
    return m;
}

/// Strict positive definiteness by pivoted LDL^H. A pivot <= 0 fails the
/// strict minor condition; a pivot inside (0, tol) is too close to the
/// boundary to certify either way.
inline PdVerdict positive_definite(const fock::Weight& nu, const ComplexAssignment& a,
                                   double tol = 1e-9) {
    if (!assignment_hermitian(a, nu.max_label()))
        throw std::invalid_argument("assignment is not hermitian");
    Eigen::MatrixXcd m = gram_numeric(nu, a);
    Eigen::LDLT<Eigen::MatrixXcd> ldlt(m);
    if (ldlt.info() != Eigen::Success) return PdVerdict::indeterminate;
    auto d = ldlt.vectorD();
    bool near_boundary = false;
    for (Eigen::Index i = 0; i < d.size(); ++i) {
        double pivot = d(i).real();
        if (pivot <= 0.0) return PdVerdict::not_positive_definite;
        if (pivot < tol) near_boundary = true;
    }
    return near_boundary ? PdVerdict::indeterminate : PdVerdict::positive_definite;
}

/// One-parameter convenience: all q_ij = q (real).
inline PdVerdict positive_definite_one(int n, double q, double tol = 1e-9) {
    ComplexAssignment a;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) a[{i, j}] = q;
    return positive_definite(fock::Weight::generic(n), a, tol);
}

}  // namespace quongram::detkit
