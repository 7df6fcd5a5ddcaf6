#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "quongram/combin/subdivision.hpp"

namespace quongram::combin {

/// Laminar family of nondegenerate intervals of {1..n}; with the outer
/// bracket [1..n] these biject with the 0-started chains of the subdivision
/// lattice that never reach the top.
struct Bracketing {
    int n = 0;
    std::vector<Interval> brackets;  // sorted by (a, b)

    int bracket_count() const { return static_cast<int>(brackets.size()); }

    bool has_outer() const {
        for (auto& b : brackets)
            if (b.a == 1 && b.b == n) return true;
        return false;
    }

    /// Nesting depth of an interval: brackets containing it (itself included).
    int depth_of(const Interval& iv) const {
        int d = 0;
        for (auto& b : brackets)
            if (b.contains(iv)) ++d;
        return d;
    }

    int depth() const {
        int d = 0;
        for (auto& b : brackets) d = std::max(d, depth_of(b));
        return d;
    }

    /// Brackets ordered deepest first (the chain's finest member first);
    /// ties by left endpoint.
    std::vector<Interval> by_depth_desc() const {
        std::vector<Interval> out = brackets;
        std::stable_sort(out.begin(), out.end(), [&](const Interval& x, const Interval& y) {
            int dx = depth_of(x), dy = depth_of(y);
            if (dx != dy) return dx > dy;
            return x.a < y.a;
        });
        return out;
    }

    /// The canonical chain: member k-1 holds the depth-k brackets.
    std::vector<Subdivision> chain() const {
        int m = depth();
        std::vector<Subdivision> out;
        for (int level = 1; level <= m; ++level) {
            std::set<int> cuts;
            for (int i = 1; i < n; ++i) cuts.insert(i);
            // a depth-`level` bracket [a..b] removes the interior cuts
            for (auto& b : brackets)
                if (depth_of(b) == level)
                    for (int i = b.a; i < b.b; ++i) cuts.erase(i);
            out.push_back(Subdivision(n, std::move(cuts)));
        }
        return out;
    }

    std::string str() const {
        std::function<std::string(int, int)> rec = [&](int a, int b) {
            std::string s = "[";
            int p = a;
            while (p <= b) {
                // maximal proper bracket starting at p
                Interval best{0, 0};
                for (auto& br : brackets)
                    if (br.a == p && !(br.a == a && br.b == b) && br.b <= b)
                        if (best.a == 0 || br.b > best.b) best = br;
                if (best.a != 0) {
                    s += rec(best.a, best.b);
                    p = best.b + 1;
                } else {
                    s += std::to_string(p);
                    ++p;
                }
            }
            return s + "]";
        };
        if (has_outer()) return rec(1, n);
        // no outer bracket: print content without the enclosing pair
        std::string inner = rec(1, n);
        return inner.substr(1, inner.size() - 2);
    }
};

namespace detail {

/// Families over [a..b] that contain the bracket [a..b] itself.
inline void enum_with_outer(int a, int b, std::vector<std::vector<Interval>>& out);

/// Sets of disjoint nondegenerate proper sub-brackets of [a..b], each carrying
/// its own with-outer family.
inline void enum_toplevel(int a, int b, int from, std::vector<Interval> acc,
                          std::vector<std::vector<Interval>>& out) {
    if (from > b) {
        out.push_back(std::move(acc));
        return;
    }
    // position `from` stays bare
    enum_toplevel(a, b, from + 1, acc, out);
    for (int e = from + 1; e <= b; ++e) {
        if (from == a && e == b) continue;  // proper sub-brackets only
        std::vector<std::vector<Interval>> subs;
        enum_with_outer(from, e, subs);
        for (auto& s : subs) {
            std::vector<Interval> next = acc;
            next.insert(next.end(), s.begin(), s.end());
            enum_toplevel(a, b, e + 1, std::move(next), out);
        }
    }
}

inline void enum_with_outer(int a, int b, std::vector<std::vector<Interval>>& out) {
    std::vector<std::vector<Interval>> inner;
    enum_toplevel(a, b, a, {}, inner);
    for (auto& f : inner) {
        f.push_back({a, b});
        out.push_back(std::move(f));
    }
}

}  // namespace detail

/// All generalized bracketings of the word 1..n. With the outer bracket these
/// are the chain terms of the inversion formula; without it, the index set of
/// the identity-coefficient formula.
inline std::vector<Bracketing> all_bracketings(int n, bool with_outer) {
    std::vector<std::vector<Interval>> fams;
    if (n == 1) {
        fams.push_back({});  // a single letter admits no brackets
    } else if (with_outer) {
        detail::enum_with_outer(1, n, fams);
    } else {
        detail::enum_toplevel(1, n, 1, {}, fams);
    }
    std::vector<Bracketing> out;
    out.reserve(fams.size());
    for (auto& f : fams) {
        std::sort(f.begin(), f.end());
        out.push_back(Bracketing{n, std::move(f)});
    }
    std::sort(out.begin(), out.end(),
              [](const Bracketing& x, const Bracketing& y) { return x.brackets < y.brackets; });
    return out;
}

}  // namespace quongram::combin
