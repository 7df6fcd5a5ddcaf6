#pragma once

#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace quongram::combin {

struct Interval {
    int a = 0, b = 0;  // [a..b], 1-based inclusive
    friend auto operator<=>(const Interval&, const Interval&) = default;
    int size() const { return b - a + 1; }
    bool degenerate() const { return a == b; }
    bool contains(const Interval& o) const { return a <= o.a && o.b <= b; }
    bool disjoint(const Interval& o) const { return b < o.a || o.b < a; }
    std::string str() const {
        if (a == b) return "[" + std::to_string(a) + "]";
        return "[" + std::to_string(a) + ".." + std::to_string(b) + "]";
    }
};

/// Ordered subdivision of {1..n} into contiguous intervals. The cut set
/// J <= {1..n-1} determines it; reverse refinement order is cut-set
/// inclusion, with bottom [1..n] (no cuts) and top [1][2]...[n].
class Subdivision {
  public:
    Subdivision() = default;
    Subdivision(int n, std::set<int> cuts) : n_(n), cuts_(std::move(cuts)) {
        for (int c : cuts_)
            if (c < 1 || c >= n) throw std::out_of_range("subdivision cut");
    }

    static Subdivision bottom(int n) { return Subdivision(n, {}); }
    static Subdivision top(int n) {
        std::set<int> c;
        for (int i = 1; i < n; ++i) c.insert(i);
        return Subdivision(n, std::move(c));
    }
    static Subdivision from_intervals(int n, const std::vector<Interval>& parts) {
        std::set<int> c;
        int expect = 1;
        for (auto& iv : parts) {
            if (iv.a != expect) throw std::invalid_argument("intervals must tile {1..n}");
            if (iv.b < n) c.insert(iv.b);
            expect = iv.b + 1;
        }
        if (expect != n + 1) throw std::invalid_argument("intervals must tile {1..n}");
        return Subdivision(n, std::move(c));
    }

    int n() const { return n_; }
    const std::set<int>& cuts() const { return cuts_; }

    std::vector<Interval> intervals() const {
        std::vector<Interval> out;
        int start = 1;
        for (int c : cuts_) {
            out.push_back({start, c});
            start = c + 1;
        }
        out.push_back({start, n_});
        return out;
    }

    int block_count() const { return static_cast<int>(cuts_.size()) + 1; }

    friend auto operator<=>(const Subdivision&, const Subdivision&) = default;

    /// sigma precedes tau iff tau refines sigma (cut sets nested).
    bool precedes_eq(const Subdivision& o) const {
        if (n_ != o.n_) return false;
        return std::includes(o.cuts_.begin(), o.cuts_.end(), cuts_.begin(), cuts_.end());
    }
    bool precedes(const Subdivision& o) const { return *this != o && precedes_eq(o); }

    Subdivision meet(const Subdivision& o) const {  // coarsest common coarsening
        std::set<int> c;
        std::set_intersection(cuts_.begin(), cuts_.end(), o.cuts_.begin(), o.cuts_.end(),
                              std::inserter(c, c.begin()));
        return Subdivision(n_, std::move(c));
    }
    Subdivision join(const Subdivision& o) const {  // finest common refinement
        std::set<int> c = cuts_;
        c.insert(o.cuts_.begin(), o.cuts_.end());
        return Subdivision(n_, std::move(c));
    }

    std::string str() const {
        std::ostringstream os;
        for (auto& iv : intervals()) os << iv.str();
        return os.str();
    }

  private:
    int n_ = 0;
    std::set<int> cuts_;
};

/// All 2^{n-1} subdivisions, ordered by cut bitmask.
inline std::vector<Subdivision> all_subdivisions(int n) {
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    std::vector<Subdivision> out;
    int bits = n - 1;
    for (unsigned mask = 0; mask < (1u << bits); ++mask) {
        std::set<int> c;
        for (int i = 0; i < bits; ++i)
            if (mask & (1u << i)) c.insert(i + 1);
        out.push_back(Subdivision(n, std::move(c)));
    }
    return out;
}

}  // namespace quongram::combin
