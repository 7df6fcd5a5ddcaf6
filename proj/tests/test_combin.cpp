#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "quongram/combin/bracketing.hpp"
#include "quongram/combin/schroeder.hpp"
#include "quongram/combin/young.hpp"

using namespace quongram;
using namespace quongram::combin;

TEST_CASE("permutation basics") {
    Perm w3 = Perm::parse("321");
    auto inv = w3.inversion_set();
    CHECK(inv == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(w3.length() == 3);

    CHECK(cycle_t(3, 1, 3).str() == "312");
    CHECK(cycle_t(3, 3, 3).is_identity());
    CHECK(w_interval(8, 3, 4).str() == "12435678");
    CHECK(w_of_cuts(8, {4}).str() == "43218765");
    CHECK(w_of_cuts(3, {}).str() == "321");

    CHECK_THROWS(cycle_t(3, 2, 4));
    CHECK_THROWS(w_interval(3, 0, 2));

    Perm g = Perm::parse("231"), h = Perm::parse("312");
    CHECK((g * h).is_identity());
    CHECK(g.inverse() == h);
    CHECK(g.descent_set() == std::set<int>{2});

    // action on words: (g.w)_p = w_{g^{-1}(p)}
    std::vector<int> w{7, 8, 9};
    CHECK(Perm::parse("231").act(w) == std::vector<int>{9, 7, 8});
}

TEST_CASE("length complement under the longest element") {
    for (int n = 2; n <= 5; ++n) {
        Perm wn = longest_perm(n);
        for (auto& g : all_perms(n))
            CHECK((g * wn).length() == n * (n - 1) / 2 - g.length());
    }
}

TEST_CASE("subdivision lists match the small cases") {
    auto s1 = all_subdivisions(1);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].str() == "[1]");

    auto s3 = all_subdivisions(3);
    std::set<std::string> names;
    for (auto& s : s3) names.insert(s.str());
    CHECK(names ==
          std::set<std::string>{"[1..3]", "[1][2..3]", "[1..2][3]", "[1][2][3]"});

    std::set<std::string> names4;
    for (auto& s : all_subdivisions(4)) names4.insert(s.str());
    CHECK(names4 == std::set<std::string>{"[1..4]", "[1..3][4]", "[1..2][3..4]", "[1][2..4]",
                                          "[1..2][3][4]", "[1][2..3][4]", "[1][2][3..4]",
                                          "[1][2][3][4]"});
}

TEST_CASE("refinement order is a lattice") {
    std::mt19937_64 rng(5);
    for (int n = 2; n <= 6; ++n) {
        auto all = all_subdivisions(n);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int t = 0; t < 60; ++t) {
            const Subdivision &a = all[pick(rng)], &b = all[pick(rng)], &c = all[pick(rng)];
            Subdivision m = a.meet(b), j = a.join(b);
            CHECK(m.precedes_eq(a));
            CHECK(m.precedes_eq(b));
            CHECK(a.precedes_eq(j));
            CHECK(b.precedes_eq(j));
            CHECK(a.meet(a) == a);
            CHECK(a.join(a) == a);
            CHECK(a.meet(b) == b.meet(a));
            CHECK(a.join(b) == b.join(a));
            CHECK(a.meet(b.meet(c)) == a.meet(b).meet(c));
            CHECK(a.join(b.join(c)) == a.join(b).join(c));
            // every fourth element below both is below the meet
            const Subdivision& d = all[pick(rng)];
            if (d.precedes_eq(a) && d.precedes_eq(b)) CHECK(d.precedes_eq(m));
        }
    }
}

TEST_CASE("bracketings with outer bracket") {
    auto b3 = all_bracketings(3, true);
    std::set<std::string> names;
    for (auto& b : b3) names.insert(b.str());
    CHECK(names == std::set<std::string>{"[123]", "[[12]3]", "[1[23]]"});

    std::set<std::string> names4;
    for (auto& b : all_bracketings(4, true)) names4.insert(b.str());
    CHECK(names4 == std::set<std::string>{"[1234]", "[1[234]]", "[12[34]]", "[1[23]4]",
                                          "[[12]34]", "[[123]4]", "[[12][34]]", "[[[12]3]4]",
                                          "[[1[23]]4]", "[1[[23]4]]", "[1[2[34]]]"});
    CHECK(all_bracketings(4, true).size() == 11);
    CHECK(all_bracketings(2, true).size() == 1);
    CHECK(all_bracketings(2, true)[0].str() == "[12]");

    // chain reconstruction of the worked 5-letter example
    Bracketing ex{5, {{1, 2}, {1, 5}, {3, 4}, {3, 5}}};
    CHECK(ex.str() == "[[12][[34]5]]");
    auto chain = ex.chain();
    REQUIRE(chain.size() == 3);
    CHECK(chain[0].str() == "[1..5]");
    CHECK(chain[1].str() == "[1..2][3..5]");
    CHECK(chain[2].str() == "[1][2][3..4][5]");
}

TEST_CASE("bracketing counts match the Schroeder recurrence") {
    auto cs = schroeder_numbers(12);
    CHECK(cs[0] == 1);
    CHECK(cs[1] == 1);
    CHECK(cs[2] == 3);
    CHECK(cs[3] == 11);
    CHECK(cs[4] == 45);
    CHECK(cs[5] == 197);
    CHECK(cs[6] == 903);
    CHECK(cs[11] == 2646723);

    for (int n = 2; n <= 10; ++n) {
        std::size_t count = all_bracketings(n, true).size();
        CHECK(Int(count) == cs[n - 1]);
        // the outer bracket is a bijection between the two families
        CHECK(all_bracketings(n, false).size() == count);
    }
}

TEST_CASE("chain refinement counts c_{n,k}") {
    auto c3 = schroeder_counts(3);
    CHECK(c3.c_nk[1] == 1);
    CHECK(c3.c_nk[2] == 2);
    auto c4 = schroeder_counts(4);
    CHECK(c4.c_nk[1] == 1);
    CHECK(c4.c_nk[2] == 5);
    CHECK(c4.c_nk[3] == 5);

    for (int n = 2; n <= 8; ++n) {
        auto c = schroeder_counts(n);
        Int sum = 0;
        for (auto& [k, v] : c.c_nk) {
            CHECK(v == schroeder_cnk_closed(n, k));
            sum += v;
        }
        CHECK(sum == c.c_n);
    }
}

TEST_CASE("young data on pinned examples") {
    Perm g = Perm::parse("41325786");
    auto d = young_data(g);
    CHECK(d.J == std::set<int>{4, 5});
    CHECK(d.sigma.str() == "[1..4][5][6..8]");
    CHECK(d.gprime.str() == "23145687");
    CHECK(d.n_of_g == 3);

    Perm id = Perm::identity(5);
    auto di = young_data(id);
    CHECK(di.J == std::set<int>{1, 2, 3, 4});
    CHECK(di.sigma == Subdivision::top(5));
    CHECK(di.gprime.is_identity());

    Perm h = Perm::parse("2413");
    auto dh = young_data(h);
    CHECK(dh.J.empty());
    CHECK(dh.gprime.str() == "3142");
}

TEST_CASE("young sequences on pinned examples") {
    auto s1 = young_sequence(Perm::parse("231"));
    CHECK(s1.tree_like);
    CHECK(*s1.depth == 2);
    REQUIRE(s1.seq.size() == 3);
    CHECK(s1.seq[1].str() == "132");

    auto s2 = young_sequence(Perm::parse("2413"));
    CHECK(!s2.tree_like);
    REQUIRE(s2.seq.size() == 3);
    CHECK(s2.seq[1].str() == "3142");
    CHECK(s2.seq[2].str() == "2413");

    auto s3 = young_sequence(Perm::parse("43218765"));
    CHECK(s3.tree_like);
    CHECK(*s3.depth == 1);
}

namespace {

// Recursive splittability criterion: a block factor with empty cut set whose
// reversal also has an empty cut set kills the whole permutation.
bool treelike_recursive(const Perm& g) {
    if (g.is_identity()) return true;
    auto J = young_cuts(g);
    if (J.empty()) {
        Perm rev = g * longest_perm(g.n());
        if (young_cuts(rev).empty() && !rev.is_identity()) return false;
        return treelike_recursive(rev);
    }
    auto d = young_data(g);
    for (std::size_t k = 0; k < d.factors.size(); ++k) {
        const Perm& local = d.factors[k];
        if (local.n() == 1) continue;
        if (!treelike_recursive(local * longest_perm(local.n()))) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("young sequence verdict matches the recursive splittability criterion") {
    for (int n = 1; n <= 6; ++n) {
        Int fact = factorial(n);
        for (auto& g : all_perms(n)) {
            auto ys = young_sequence(g);
            CHECK(Int(ys.seq.size()) <= fact);
            CHECK(ys.tree_like == treelike_recursive(g));
        }
    }
}
