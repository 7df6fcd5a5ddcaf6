#pragma once

#include <optional>
#include <set>
#include <vector>

#include "quongram/combin/perm.hpp"
#include "quongram/combin/subdivision.hpp"

namespace quongram::combin {

/// Minimal-Young-subgroup data of a permutation.
///
/// J(g) = { j : g(1)+...+g(j) = 1+...+j }; when J(g) is empty the reversal
/// w_{J(g)} is the full w_n.
struct YoungData {
    std::set<int> J;
    Subdivision sigma;          // subdivision determined by J(g)
    std::vector<Perm> factors;  // block-local permutations, relabeled to 1..|block|
    Perm gprime;                // g * w_{J(g)}
    int n_of_g = 0;             // number of minimal Young factors = blocks
};

/// Block-local view of g on [a..b]; requires g to preserve the interval.
inline Perm restrict_to_interval(const Perm& g, int a, int b) {
    std::vector<int> v;
    v.reserve(b - a + 1);
    for (int i = a; i <= b; ++i) v.push_back(g(i) - a + 1);
    return Perm(std::move(v));
}

inline std::set<int> young_cuts(const Perm& g) {
    std::set<int> J;
    long long sum = 0, tri = 0;
    for (int j = 1; j < g.n(); ++j) {
        sum += g(j);
        tri += j;
        if (sum == tri) J.insert(j);
    }
    return J;
}

inline YoungData young_data(const Perm& g) {
    YoungData d;
    d.J = young_cuts(g);
    d.sigma = Subdivision(g.n(), d.J);
    d.n_of_g = d.sigma.block_count();
    for (auto& iv : d.sigma.intervals()) d.factors.push_back(restrict_to_interval(g, iv.a, iv.b));
    d.gprime = g * w_of_cuts(g.n(), d.J);
    return d;
}

/// Iteration g -> g * w_{J(g)}. Tree-like permutations reach the identity;
/// the rest enter a cycle.
struct YoungSequence {
    std::vector<Perm> seq;  // g^(0), g^(1), ... up to id or first repeat
    bool tree_like = false;
    std::optional<int> depth;
};

inline YoungSequence young_sequence(const Perm& g) {
    YoungSequence ys;
    std::set<Perm> seen;
    Perm cur = g;
    for (;;) {
        ys.seq.push_back(cur);
        if (cur.is_identity()) {
            ys.tree_like = true;
            ys.depth = static_cast<int>(ys.seq.size()) - 1;
            return ys;
        }
        if (!seen.insert(cur).second) return ys;  // cycle without identity
        cur = cur * w_of_cuts(cur.n(), young_cuts(cur));
    }
}

}  // namespace quongram::combin
