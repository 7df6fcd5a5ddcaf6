#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace quongram::combin {

/// Permutation of {1..n} in one-line notation. Composition is
/// (g*h)(i) = g(h(i)); the action on words is (g.w)_p = w_{g^{-1}(p)}.
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size() + 1, false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    static Perm identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Perm(std::move(v));
    }

    static Perm parse(const std::string& one_line) {
        std::vector<int> v;
        if (one_line.find(',') != std::string::npos) {
            std::size_t pos = 0;
            while (pos < one_line.size()) {
                std::size_t next = one_line.find(',', pos);
                if (next == std::string::npos) next = one_line.size();
                v.push_back(std::stoi(one_line.substr(pos, next - pos)));
                pos = next + 1;
            }
        } else {
            for (char c : one_line) {
                if (c < '1' || c > '9') throw std::invalid_argument("bad one-line permutation");
                v.push_back(c - '0');
            }
        }
        return Perm(std::move(v));
    }

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }  // 1-based
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 1; i <= n(); ++i)
            if (img_[i - 1] != i) return false;
        return true;
    }

    friend auto operator<=>(const Perm&, const Perm&) = default;

    Perm operator*(const Perm& h) const {  // (g*h)(i) = g(h(i))
        std::vector<int> v(img_.size());
        for (int i = 1; i <= n(); ++i) v[i - 1] = (*this)(h(i));
        Perm r;
        r.img_ = std::move(v);
        return r;
    }

    Perm inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 1; i <= n(); ++i) v[img_[i - 1] - 1] = i;
        Perm r;
        r.img_ = std::move(v);
        return r;
    }

    /// I(g) = {(a,b) : a<b, g(a)>g(b)}.
    std::vector<std::pair<int, int>> inversion_set() const {
        std::vector<std::pair<int, int>> r;
        for (int a = 1; a <= n(); ++a)
            for (int b = a + 1; b <= n(); ++b)
                if (img_[a - 1] > img_[b - 1]) r.push_back({a, b});
        return r;
    }

    int length() const {
        int l = 0;
        for (int a = 1; a <= n(); ++a)
            for (int b = a + 1; b <= n(); ++b)
                if (img_[a - 1] > img_[b - 1]) ++l;
        return l;
    }

    std::set<int> descent_set() const {
        std::set<int> d;
        for (int i = 1; i < n(); ++i)
            if (img_[i - 1] > img_[i]) d.insert(i);
        return d;
    }

    /// Place action on a letter sequence: out_p = w_{g^{-1}(p)}.
    template <class Word>
    Word act(const Word& w) const {
        Word out = w;
        for (int p = 1; p <= n(); ++p) out[img_[p - 1] - 1] = w[p - 1];
        return out;
    }

    std::string str() const {
        std::string s;
        bool digits = n() <= 9;
        for (int i = 0; i < n(); ++i) {
            if (digits) s += static_cast<char>('0' + img_[i]);
            else {
                if (i) s += ",";
                s += std::to_string(img_[i]);
            }
        }
        return s;
    }

  private:
    std::vector<int> img_;
};

/// Cycle t_{a,b}: maps b -> b-1 -> ... -> a -> b, fixes the rest.
inline Perm cycle_t(int n, int a, int b) {
    if (!(1 <= a && a <= b && b <= n)) throw std::out_of_range("cycle_t interval");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int k = a + 1; k <= b; ++k) v[k - 1] = k - 1;
    v[a - 1] = b;
    return Perm(std::move(v));
}

/// Interval reversal w_{[a..b]}.
inline Perm w_interval(int n, int a, int b) {
    if (!(1 <= a && a <= b && b <= n)) throw std::out_of_range("w_interval");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    for (int k = a; k <= b; ++k) v[k - 1] = a + b - k;
    return Perm(std::move(v));
}

inline Perm longest_perm(int n) { return w_interval(n, 1, n); }

/// w_J: reversal of every block of the subdivision cut at J. The empty J
/// reverses the whole interval.
inline Perm w_of_cuts(int n, const std::set<int>& J) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    int start = 1;
    auto flush = [&](int end) {
        for (int k = start; k <= end; ++k) v[k - 1] = start + end - k;
        start = end + 1;
    };
    for (int j : J) flush(j);
    flush(n);
    return Perm(std::move(v));
}

inline std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do out.push_back(Perm(v));
    while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace quongram::combin
