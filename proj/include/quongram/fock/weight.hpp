#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "quongram/combin/perm.hpp"
#include "quongram/symring/bigint.hpp"

namespace quongram::fock {

using Word = std::vector<int>;  // letter sequence, labels >= 1

inline std::string word_str(const Word& w) {
    std::string s;
    bool digits = true;
    for (int l : w) digits = digits && l <= 9;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (digits) s += static_cast<char>('0' + w[i]);
        else {
            if (i) s += ",";
            s += std::to_string(w[i]);
        }
    }
    return s;
}

inline Word parse_word(const std::string& s) {
    Word w;
    if (s.find(',') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t next = s.find(',', pos);
            if (next == std::string::npos) next = s.size();
            w.push_back(std::stoi(s.substr(pos, next - pos)));
            pos = next + 1;
        }
    } else {
        for (char c : s) {
            if (c < '1' || c > '9') throw std::invalid_argument("bad word: " + s);
            w.push_back(c - '0');
        }
    }
    return w;
}

/// Letter content of a weight space: a sorted multiset of index labels.
class Weight {
  public:
    Weight() = default;
    explicit Weight(Word letters) : letters_(std::move(letters)) {
        std::sort(letters_.begin(), letters_.end());
        for (int l : letters_)
            if (l < 1) throw std::invalid_argument("labels must be >= 1");
    }

    static Weight generic(int n) {
        Word w(n);
        std::iota(w.begin(), w.end(), 1);
        return Weight(std::move(w));
    }

    const Word& letters() const { return letters_; }
    int n() const { return static_cast<int>(letters_.size()); }

    bool is_generic() const {
        for (std::size_t i = 1; i < letters_.size(); ++i)
            if (letters_[i] == letters_[i - 1]) return false;
        return true;
    }

    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int l : letters_) m[l]++;
        return m;
    }

    Int dim() const {
        Int d = factorial(n());
        for (auto& [l, m] : multiplicities()) d /= factorial(m);
        return d;
    }

    int max_label() const { return letters_.empty() ? 0 : letters_.back(); }

    friend auto operator<=>(const Weight&, const Weight&) = default;

    std::string str() const { return word_str(letters_); }

  private:
    Word letters_;
};

inline Weight weight_of(const Word& w) { return Weight(w); }

/// Word basis of a weight space in lexicographic order, with index lookup
/// and cached place-permutation action tables.
class Basis {
  public:
    explicit Basis(Weight w) : weight_(std::move(w)) {
        Word cur = weight_.letters();
        do words_.push_back(cur);
        while (std::next_permutation(cur.begin(), cur.end()));
    }

    const Weight& weight() const { return weight_; }
    int n() const { return weight_.n(); }
    int dim() const { return static_cast<int>(words_.size()); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(int i) const { return words_[i]; }

    int index(const Word& w) const {
        auto it = std::lower_bound(words_.begin(), words_.end(), w);
        if (it == words_.end() || *it != w) throw std::out_of_range("word not in basis");
        return static_cast<int>(it - words_.begin());
    }

    /// tbl[i] = index of g . word_i (place action).
    const std::vector<int>& action_table(const combin::Perm& g) const {
        auto it = action_cache_.find(g);
        if (it != action_cache_.end()) return it->second;
        std::vector<int> tbl(words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i) tbl[i] = index(g.act(words_[i]));
        return action_cache_.emplace(g, std::move(tbl)).first->second;
    }

  private:
    Weight weight_;
    std::vector<Word> words_;
    mutable std::map<combin::Perm, std::vector<int>> action_cache_;
};

}  // namespace quongram::fock
