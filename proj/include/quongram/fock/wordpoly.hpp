#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "quongram/fock/weight.hpp"
#include "quongram/symring/poly.hpp"

namespace quongram::fock {

using symring::Monomial;
using symring::ParamVar;
using symring::Poly;

/// Element of the free algebra with Poly coefficients, graded by weight.
class WordPoly {
  public:
    using Terms = std::map<Word, Poly>;

    WordPoly() = default;
    static WordPoly of_word(Word w, Poly c = Poly::one()) {
        WordPoly x;
        if (!c.is_zero()) x.t_[std::move(w)] = std::move(c);
        return x;
    }

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const Word& w, const Poly& c) {
        if (c.is_zero()) return;
        auto it = t_.find(w);
        if (it == t_.end()) t_.emplace(w, c);
        else {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    WordPoly& operator+=(const WordPoly& o) {
        for (auto& [w, c] : o.t_) add(w, c);
        return *this;
    }
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    WordPoly& operator-=(const WordPoly& o) {
        for (auto& [w, c] : o.t_) add(w, -c);
        return *this;
    }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }

    friend WordPoly operator*(const WordPoly& a, const WordPoly& b) {  // concatenation
        WordPoly r;
        for (auto& [wa, ca] : a.t_)
            for (auto& [wb, cb] : b.t_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }

    WordPoly scaled(const Poly& c) const {
        WordPoly r;
        for (auto& [w, k] : t_) r.add(w, k * c);
        return r;
    }

    Poly coefficient(const Word& w) const {
        auto it = t_.find(w);
        return it == t_.end() ? Poly::zero() : it->second;
    }

    bool operator==(const WordPoly& o) const { return t_ == o.t_; }

  private:
    Terms t_;
};

enum class Side { left, right };

/// Deformed partial derivative.
///   left:  i_d(th_{j1}...th_{jn}) = sum_{p: jp=i} q_{i j1}...q_{i j_{p-1}} * (omit p)
///   right: places after p contribute q_{j_t i} instead.
inline WordPoly deformed_partial(Side side, int i, const WordPoly& x) {
    WordPoly out;
    for (auto& [w, c] : x.terms()) {
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (w[p] != i) continue;
            Monomial m;
            if (side == Side::left) {
                for (std::size_t t = 0; t < p; ++t)
                    m = m * Monomial::var(ParamVar{static_cast<std::int16_t>(i),
                                                   static_cast<std::int16_t>(w[t])});
            } else {
                for (std::size_t t = p + 1; t < w.size(); ++t)
                    m = m * Monomial::var(ParamVar{static_cast<std::int16_t>(w[t]),
                                                   static_cast<std::int16_t>(i)});
            }
            Word rest;
            rest.reserve(w.size() - 1);
            for (std::size_t t = 0; t < w.size(); ++t)
                if (t != p) rest.push_back(w[t]);
            out.add(rest, c * Poly::monomial(m));
        }
    }
    return out;
}

/// One coproduct splitting: (left subword, right subword, coefficient).
struct CoproductTerm {
    Word left;
    Word right;
    Monomial coeff;
};

/// All shuffle splittings of r(th_w). The coefficient of a splitting with
/// left position set S is prod q_{w_p w_{p'}} over pairs p < p' with p
/// going right and p' going left, which is what the algebra homomorphism
/// r(th_w) = r(th_{w_1})...r(th_{w_n}) into the q-twisted tensor square
/// produces.
inline std::vector<CoproductTerm> coproduct(const Word& w) {
    int n = static_cast<int>(w.size());
    std::vector<CoproductTerm> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        CoproductTerm t;
        Monomial m;
        for (int p = 0; p < n; ++p) {
            if (mask & (1u << p)) t.left.push_back(w[p]);
            else t.right.push_back(w[p]);
        }
        for (int p = 0; p < n; ++p)
            for (int pp = p + 1; pp < n; ++pp)
                if (!(mask & (1u << p)) && (mask & (1u << pp)))
                    m = m * Monomial::var(ParamVar{static_cast<std::int16_t>(w[p]),
                                                   static_cast<std::int16_t>(w[pp])});
        t.coeff = m;
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace quongram::fock
