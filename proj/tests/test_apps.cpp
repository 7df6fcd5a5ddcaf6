#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "quongram/apps/arrangement.hpp"
#include "quongram/apps/contravariant.hpp"
#include "quongram/detkit/bruteforce.hpp"

using namespace quongram;
using namespace quongram::apps;
using namespace quongram::symring;
using combin::Perm;
using fock::Weight;

namespace {

/// Plain fraction determinant over the rationals, for the numeric-weight
/// cross-check.
Rational det_rational(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (m[r][k] != Rational(0)) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (int r = k + 1; r < n; ++r) {
            if (m[r][k] == Rational(0)) continue;
            Rational f = m[r][k] / m[k][k];
            for (int c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("region form basics") {
    // diagonal entries are 1, the form is symmetric
    ArrangementForm f = bform(3);
    for (int i = 0; i < 6; ++i) {
        CHECK(f.matrix.entries[i][i].num.is_one());
        for (int j = 0; j < 6; ++j)
            CHECK(f.matrix.entries[i][j].num == f.matrix.entries[j][i].num);
    }
    // a single separating hyperplane for the two chambers of n = 2
    CHECK(bform_entry(Perm::parse("12"), Perm::parse("21")) == Poly::variable(1, 2));
}

TEST_CASE("region form coincides with the real-symmetric Gram matrix") {
    SymbolicCtx rctx(ParamMode::real_symmetric);
    for (int n = 2; n <= 4; ++n) {
        ArrangementForm f = bform(n);
        fock::DenseMatrix a = gram(rctx, Weight::generic(n));
        // chamber P_pi corresponds to the word (pi(1), ..., pi(n)); both
        // bases are listed in the same lexicographic order
        for (int i = 0; i < f.matrix.dim(); ++i)
            for (int j = 0; j < f.matrix.dim(); ++j)
                CHECK(f.matrix.entries[i][j].num == a.entries[i][j].num);
    }
}

TEST_CASE("arrangement determinant in factored form") {
    CHECK(bform_det(2).expand(ParamMode::real_symmetric) ==
          Poly::one() - Poly::variable(1, 2, 2));

    // n=3: (1-q12^2)^2 (1-q13^2)^2 (1-q23^2)^2 (1-(q12 q13 q23)^2)
    detkit::FactoredDet d3 = bform_det(3);
    CHECK(d3.expand(ParamMode::real_symmetric) ==
          detkit::det_closed(Weight::generic(3), ParamMode::real_symmetric)
              .expand(ParamMode::real_symmetric));

    // l(L) = (k-2)!(n-k+1)!: pairs at n = 4 carry exponent 6
    detkit::FactoredDet d4 = bform_det(4);
    for (auto& [f, e] : d4.factors)
        if (f.size() == 2) CHECK(e == 6);

    for (int n = 2; n <= 4; ++n) {
        auto fd = bform_det(n);
        auto closed = detkit::det_closed(Weight::generic(n), ParamMode::real_symmetric);
        CHECK(fd.factors == closed.factors);
    }
}

TEST_CASE("arrangement determinant matches brute force") {
    SymbolicCtx rctx(ParamMode::real_symmetric);
    for (int n = 2; n <= 3; ++n) {
        fock::DenseMatrix m = bform(n).matrix;
        CHECK(detkit::det_bruteforce(m) == bform_det(n).expand(ParamMode::real_symmetric));
    }
    CHECK(detkit::gram_det_matches(Weight::generic(4), ParamMode::real_symmetric, bform_det(4),
                                   default_primes(), 20, 0xA22A));
}

TEST_CASE("rational weights evaluate exactly") {
    RationalWeights w;
    w[{1, 2}] = Rational(1, 2);
    w[{1, 3}] = Rational(1, 3);
    w[{2, 3}] = Rational(2, 5);
    CHECK(bform_entry_value(Perm::parse("123"), Perm::parse("123"), w) == Rational(1));
    CHECK(bform_entry_value(Perm::parse("12"), Perm::parse("21"),
                            RationalWeights{{{1, 2}, Rational(1, 2)}}) == Rational(1, 2));

    std::vector<std::vector<Rational>> m(6, std::vector<Rational>(6));
    fock::Basis basis(Weight::generic(3));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            m[i][j] = bform_entry_value(Perm(basis.word(i)), Perm(basis.word(j)), w);
    CHECK(det_rational(m) == bform_det_value(3, w));
}

TEST_CASE("contravariant determinant for two letters") {
    CartanData c2{2, {{{1, 2}, 3}}};
    ContravariantDet d = contravariant_det(c2);
    REQUIRE(d.factors.size() == 1);
    CHECK(d.factors[0].s == 3);
    CHECK(d.factors[0].mult == 1);
    // q^{-b/2}(1 - q^b) = u^{-3} - u^{3}
    LaurentU expect;
    expect.add(-3, 1);
    expect.add(3, -1);
    CHECK(d.expand_first_form() == expect);
    CHECK(d.expand_second_form() == expect);
}

TEST_CASE("contravariant factor multiplicities") {
    CartanData c4{4, {}};
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) c4.b[{k, l}] = 1;
    ContravariantDet d = contravariant_det(c4);
    for (auto& f : d.factors) {
        int m = static_cast<int>(f.subset.size());
        long long expect = 1;
        for (int t = 2; t <= m - 2; ++t) expect *= t;
        for (int t = 2; t <= 4 - m + 1; ++t) expect *= t;
        CHECK(f.mult == expect);
    }
}

TEST_CASE("degenerate Cartan data kills the determinant") {
    CartanData c3{3, {{{1, 2}, 0}, {{1, 3}, 0}, {{2, 3}, 0}}};
    CHECK(contravariant_det(c3).expand_first_form().is_zero());
}

TEST_CASE("contravariant form ties back to the Gram determinant") {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<long long> coeff(-3, 5);
    for (int n = 2; n <= 4; ++n) {
        for (int t = 0; t < 5; ++t) {
            CartanData c{n, {}};
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) c.b[{k, l}] = coeff(rng);
            CHECK(contravariant_matches_gram(c));
        }
    }
}

TEST_CASE("constant Cartan matrix b = 2 recovers the one-parameter determinant") {
    for (int n = 2; n <= 4; ++n) {
        CartanData c{n, {}};
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l) c.b[{k, l}] = 2;
        ContravariantDet d = contravariant_det(c);
        // the factor product (prefactor dropped) is det_zagier with q = u^2
        LaurentU factors = LaurentU::one();
        for (auto& f : d.factors) {
            LaurentU base = LaurentU::monomial(0, 1);
            base.add(2 * f.s, -1);
            factors = factors * base.pow(f.mult);
        }
        LaurentU zag;
        Poly zag_poly = detkit::det_zagier(n).expand(ParamMode::one_parameter);
        for (auto& [m, cval] : zag_poly.terms()) {
            int deg = 0;
            for (auto& [v, e] : m.factors()) deg = e;
            zag.add(2 * deg, cval);
        }
        CHECK(factors == zag);
    }
}
