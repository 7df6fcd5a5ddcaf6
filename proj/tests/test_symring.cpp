#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "quongram/symring/entry.hpp"

using namespace quongram;
using namespace quongram::symring;

namespace {

Poly qv(int i, int j) { return Poly::variable(i, j); }

Poly box12() { return expand_box(canon_box({1, 2}, ParamMode::multi), ParamMode::multi); }

Poly random_poly(std::mt19937_64& rng, int max_terms = 4) {
    std::uniform_int_distribution<int> coeff(-3, 3), label(1, 3), expo(0, 2),
        nterms(0, max_terms);
    Poly p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m = Monomial::var({static_cast<std::int16_t>(label(rng)),
                                    static_cast<std::int16_t>(label(rng))},
                                   expo(rng)) *
                     Monomial::var({static_cast<std::int16_t>(label(rng)),
                                    static_cast<std::int16_t>(label(rng))},
                                   expo(rng));
        p.add_term(m, coeff(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic on pinned values") {
    Poly a = Poly::one() + qv(1, 2);
    CHECK(a + Poly::constant(-1) == qv(1, 2));
    CHECK(qv(1, 2) * qv(2, 1) == Poly::monomial(Monomial::var({1, 2}) * Monomial::var({2, 1})));

    Poly sq = box12() * box12();
    Poly expect = Poly::one();
    expect.add_term(Monomial::var({1, 2}) * Monomial::var({2, 1}), -2);
    expect.add_term(Monomial::var({1, 2}, 2) * Monomial::var({2, 1}, 2), 1);
    CHECK(sq == expect);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("conjugation is an involutive ring automorphism") {
    CHECK((qv(1, 2) * qv(1, 3)).conjugated() == qv(2, 1) * qv(3, 1));
    CHECK(box12().conjugated() == box12());  // 1 - q12 q21 is self-conjugate
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.conjugated().conjugated() == a);
        CHECK((a * b).conjugated() == a.conjugated() * b.conjugated());
        CHECK((a + b).conjugated() == a.conjugated() + b.conjugated());
    }
}

TEST_CASE("specialization to one-parameter and real-symmetric modes") {
    Poly b123 = expand_box(canon_box({1, 2, 3}, ParamMode::multi), ParamMode::multi);
    Poly q6 = Poly::one() - Poly::variable(ParamVar::q(), 6);
    CHECK(b123.specialized(ParamMode::one_parameter) == q6);

    Poly q2 = Poly::one() - Poly::variable(ParamVar::q(), 2);
    CHECK(box12().specialized(ParamMode::one_parameter) == q2);

    CHECK(qv(2, 1).specialized(ParamMode::real_symmetric) == qv(1, 2));
    CHECK(qv(1, 2).specialized(ParamMode::real_symmetric) == qv(1, 2));

    // one-parameter specialization factors through the real-symmetric one
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        Poly p = random_poly(rng);
        CHECK(p.specialized(ParamMode::real_symmetric).specialized(ParamMode::one_parameter) ==
              p.specialized(ParamMode::one_parameter));
    }
}

TEST_CASE("one-parameter box expansion is cyclotomic-type for every size") {
    for (int k = 2; k <= 6; ++k) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i) s.push_back(i + 11);  // arbitrary labels
        Poly e = expand_box(canon_box(s, ParamMode::one_parameter), ParamMode::one_parameter);
        CHECK(e == Poly::one() - Poly::variable(ParamVar::q(), k * (k - 1)));
    }
}

TEST_CASE("modular evaluation") {
    auto point = [](ParamVar v) -> std::uint64_t {
        if (v == ParamVar{1, 2}) return 2;
        if (v == ParamVar{2, 1}) return 3;
        return 1;
    };
    CHECK(Poly::zero().eval_mod(point, 101) == 0);
    CHECK(box12().eval_mod(point, 101) == 96);  // 1 - 6 mod 101

    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::uint64_t> dist(0, 100);
    for (int i = 0; i < 100; ++i) {
        Poly a = random_poly(rng), b = random_poly(rng);
        std::map<ParamVar, std::uint64_t> vals;
        auto pt = [&](ParamVar v) -> std::uint64_t {
            auto it = vals.find(v);
            if (it == vals.end()) it = vals.emplace(v, dist(rng)).first;
            return it->second;
        };
        std::uint64_t lhs = (a * b).eval_mod(pt, 101);
        CHECK(lhs == (a.eval_mod(pt, 101) * b.eval_mod(pt, 101)) % 101);
        CHECK((a + b).eval_mod(pt, 101) == (a.eval_mod(pt, 101) + b.eval_mod(pt, 101)) % 101);
    }
}

TEST_CASE("eval commutes with specialization") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        Poly a = random_poly(rng);
        for (auto mode : {ParamMode::real_symmetric, ParamMode::one_parameter}) {
            auto pt = ModPoint::random(mode, 3, default_primes()[0], rng);
            auto lifted = [&](ParamVar v) { return pt.var(v); };
            CHECK(a.specialized(mode).eval_mod(lifted, pt.zp.p) ==
                  a.eval_mod(lifted, pt.zp.p));
        }
    }
}

TEST_CASE("exact division") {
    Poly b13 = expand_box(canon_box({1, 3}, ParamMode::multi), ParamMode::multi);
    Poly prod = box12() * b13;
    auto q = prod.divided_by(b13);
    REQUIRE(q.has_value());
    CHECK(*q == box12());
    CHECK(!box12().divided_by(b13).has_value());
    CHECK(!(box12() + Poly::one()).divided_by(box12()).has_value());
}

TEST_CASE("canonical text form") {
    CHECK(box12().str() == "1 - q[1,2]*q[2,1]");
    Poly p = Poly::one() - Poly::variable(ParamVar::q(), 2);
    CHECK(p.str() == "1 - q^2");
    CHECK(Poly::zero().str() == "0");
}

TEST_CASE("rational entries cancel whole box factors only") {
    SymbolicCtx ctx(ParamMode::multi);
    RatEntry e = ctx.div_box(ctx.one(), {1, 2});
    CHECK(e.den.total_multiplicity() == 1);

    RatEntry cleared = ctx.mul_poly(e, box12());
    CHECK(cleared.den.empty());
    CHECK(cleared.num == Poly::one());

    RatEntry sum = ctx.add(e, ctx.one());
    // (1 + box12) / box12 stays uncancelled
    CHECK(sum.den.total_multiplicity() == 1);
    CHECK(sum.num == Poly::one() + box12());

    RatEntry diff = ctx.sub(e, e);
    CHECK(ctx.is_zero(diff));
    CHECK(diff.den.empty());

    CHECK(ctx.equal(ctx.mul(e, ctx.from_poly(box12())), ctx.one()));
}

TEST_CASE("modular context mirrors the symbolic ring") {
    std::mt19937_64 rng(23);
    auto pt = ModPoint::random(ParamMode::multi, 3, default_primes()[1], rng);
    ModularCtx mctx(pt);
    SymbolicCtx sctx(ParamMode::multi);

    RatEntry s = sctx.div_box(sctx.var(1, 2), {1, 2, 3});
    std::uint64_t m = mctx.div_box(mctx.var(1, 2), {1, 2, 3});
    std::uint64_t num = pt.eval(s.num);
    std::uint64_t den = s.den.eval(pt);
    CHECK(pt.zp.mul(m, den) == num);
}
