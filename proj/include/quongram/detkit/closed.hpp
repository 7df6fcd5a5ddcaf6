#pragma once

#include <stdexcept>

#include "quongram/detkit/factored.hpp"
#include "quongram/fock/weight.hpp"

namespace quongram::detkit {

using fock::Weight;

namespace detail {

template <class Fn>
void for_each_subset(const std::vector<int>& letters, int size, Fn&& fn) {
    int n = static_cast<int>(letters.size());
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(pick.size()) == size) {
            fn(pick);
            return;
        }
        for (int i = from; i < n; ++i) {
            pick.push_back(letters[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
}

}  // namespace detail

/// det A^(nu) = prod over subsets mu of nu with |mu| >= 2 of
/// box_mu ^ (|mu|-2)! (n-|mu|+1)!  (generic weights only).
inline FactoredDet det_closed(const Weight& nu, ParamMode mode = ParamMode::multi) {
    if (!nu.is_generic())
        throw std::invalid_argument("closed determinant requires a generic weight");
    int n = nu.n();
    FactoredDet out;
    for (int k = 2; k <= n; ++k) {
        long long e = 1;
        for (int t = 2; t <= k - 2; ++t) e *= t;           // (k-2)!
        for (int t = 2; t <= n - k + 1; ++t) e *= t;       // (n-k+1)!
        detail::for_each_subset(nu.letters(), k, [&](const std::vector<int>& mu) {
            out.push(canon_box(mu, mode), e);
        });
    }
    return out;
}

enum class BlockKind { a, b };

/// Block determinants:
///   kind a: det(I - R^hat(t_{a,b}))                over subsets of size b-a+1,
///           exponent (b-a)! (n+a-b-1)!
///   kind b: det(I - Q_{{b,b+1}} R^hat(t_{a,b}))    over subsets of size b-a+2,
///           exponent (b-a+2)(b-a)! (n+a-b-2)!
inline FactoredDet det_block(const Weight& nu, BlockKind kind, int a, int b,
                             ParamMode mode = ParamMode::multi) {
    if (!nu.is_generic()) throw std::invalid_argument("det_block requires a generic weight");
    int n = nu.n();
    int size;
    long long e = 1;
    if (kind == BlockKind::a) {
        if (!(1 <= a && a < b && b <= n)) throw std::out_of_range("det_block kind a range");
        size = b - a + 1;
        for (int t = 2; t <= b - a; ++t) e *= t;
        for (int t = 2; t <= n + a - b - 1; ++t) e *= t;
    } else {
        if (!(1 <= a && a <= b && b < n)) throw std::out_of_range("det_block kind b range");
        size = b - a + 2;
        e = b - a + 2;
        for (int t = 2; t <= b - a; ++t) e *= t;
        for (int t = 2; t <= n + a - b - 2; ++t) e *= t;
    }
    FactoredDet out;
    detail::for_each_subset(nu.letters(), size, [&](const std::vector<int>& mu) {
        out.push(canon_box(mu, mode), e);
    });
    return out;
}

/// One-parameter determinant: prod_{k=2}^n (1-q^{k(k-1)})^{n!(n-k+1)/(k(k-1))}.
inline FactoredDet det_zagier(int n) {
    FactoredDet out;
    for (int k = 2; k <= n; ++k) {
        Int e = factorial(n) * (n - k + 1) / (k * (k - 1));
        std::vector<int> support(k);
        std::iota(support.begin(), support.end(), 1);
        out.push(canon_box(support, ParamMode::one_parameter),
                 static_cast<long long>(e));
    }
    return out;
}

}  // namespace quongram::detkit
