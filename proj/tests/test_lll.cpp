#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatgames/lll.hpp"
#include "hatgames/oracle.hpp"
#include "helpers.hpp"

using namespace hg;

TEST_CASE("dual dependency transposes arcs") {
    Digraph d = helpers::named_vertices(3);
    d.add_arc(0, 1);
    d.add_arc(1, 2);
    Digraph t = dual_dependency(d);
    CHECK(t.has_arc(1, 0));
    CHECK(t.has_arc(2, 1));
    CHECK_FALSE(t.has_arc(0, 1));
}

TEST_CASE("degree bounds") {
    SUBCASE("directed bound uses the max in-degree") {
        Digraph d = helpers::named_vertices(3);
        d.add_arc(0, 2);
        d.add_arc(1, 2);
        DegreeBounds b = degree_bounds(d);
        REQUIRE(b.directed);
        // e*(Delta^- + 1) with Delta^- = 2, so just above 8.1548.
        CHECK(*b.directed > Rat(8154, 1000));
        CHECK(*b.directed < Rat(8156, 1000));
        CHECK_FALSE(b.undirected);
    }
    SUBCASE("undirected bound is Delta^Delta over (Delta-1)^(Delta-1)") {
        Digraph d = helpers::named_vertices(4);
        for (int i = 1; i < 4; ++i) d.add_edge(0, i);
        DegreeBounds b = degree_bounds(d);
        REQUIRE(b.undirected);
        CHECK(*b.undirected == Rat(27, 4));
    }
}

TEST_CASE("acyclicity polynomial") {
    SUBCASE("matches the independence polynomial on undirected graphs") {
        // Path on three vertices, w = 1/2 everywhere: acyclic subsets are
        // exactly the independent ones since any edge is a 2-cycle.
        Digraph d = helpers::named_vertices(3);
        d.add_edge(0, 1);
        d.add_edge(1, 2);
        std::vector<Rat> w(3, Rat(1, 2));
        std::vector<bool> s(3, true);
        // 1 - 3/2 + (one independent pair)/4
        CHECK(acyclicity_poly(d, w, s) == Rat(-1, 4));
    }
    SUBCASE("directed cycle only excludes the full subset") {
        Digraph d = helpers::named_vertices(3);
        for (int i = 0; i < 3; ++i) d.add_arc(i, (i + 1) % 3);
        std::vector<Rat> w(3, Rat(1, 2));
        std::vector<bool> s(3, true);
        // All proper subsets acyclic: (1 - 1/2)^3 plus the cycle term back.
        CHECK(acyclicity_poly(d, w, s) == Rat(1, 8) + Rat(1, 8));
        s[2] = false;
        CHECK(acyclicity_poly(d, w, s) == Rat(1, 4));
    }
}

TEST_CASE("lll certificate") {
    SUBCASE("explicit x on an edge with scarce guesses") {
        Game g = helpers::clique_game({3, 3}, {1, 1});
        // r = 1/3 <= x(1-x) needs no valid x; 1/4 is the max of x(1-x).
        CHECK_FALSE(lll_unwinnable_test(g, {Rat(1, 2), Rat(1, 2)}).unwinnable);
        Game g4 = helpers::clique_game({5, 5}, {1, 1});
        LllResult r = lll_unwinnable_test(g4, {Rat(1, 2), Rat(1, 2)});
        CHECK(r.unwinnable);
        CHECK(decide_winnable(g4).verdict == Verdict::Unwinnable);
    }
    SUBCASE("x outside the open unit interval is rejected") {
        Game g = helpers::clique_game({3, 3}, {1, 1});
        CHECK_THROWS_AS(lll_unwinnable_test(g, {Rat(0), Rat(1, 2)}),
                        std::invalid_argument);
        CHECK_THROWS_AS(lll_unwinnable_test(g, {Rat(1), Rat(1, 2)}),
                        std::invalid_argument);
    }
    SUBCASE("auto mode finds witnesses and stays sound") {
        std::mt19937 rng(97);
        int flagged = 0;
        for (int trial = 0; trial < 80; ++trial) {
            Game g = helpers::random_game(4, 5, rng);
            if (lll_unwinnable_test(g).unwinnable) {
                ++flagged;
                CHECK(decide_winnable(g).verdict == Verdict::Unwinnable);
            }
        }
        CHECK(flagged >= 5);
    }
}

TEST_CASE("shearer test on undirected games") {
    SUBCASE("the K2 ratio boundary") {
        // r = (1/3, 1/3): Z = 1 - 2/3 + 0 (edge not independent) = 1/3 > 0.
        Game g = helpers::clique_game({3, 3}, {1, 1});
        CHECK(shearer_unwinnable_test(g));
        CHECK(decide_winnable(g).verdict == Verdict::Unwinnable);
        // r = (1/2, 1/2): Z = 0, inconclusive; the game is in fact winnable.
        Game h = helpers::clique_game({2, 2}, {1, 1});
        CHECK_FALSE(shearer_unwinnable_test(h));
    }
    SUBCASE("a nine-hat four-cycle is certified unwinnable") {
        Game g = helpers::undir_cycle_game({9, 9, 9, 9}, {1, 1, 1, 1});
        CHECK(shearer_unwinnable_test(g));
    }
    SUBCASE("directed games are rejected") {
        Game g = helpers::dir_cycle_game({2, 2, 2}, {1, 1, 1});
        CHECK_THROWS_AS(shearer_unwinnable_test(g), std::invalid_argument);
    }
    SUBCASE("flagged random games are truly unwinnable") {
        std::mt19937 rng(131);
        int flagged = 0;
        for (int trial = 0; trial < 60; ++trial) {
            Game g = helpers::random_game(4, 5, rng, true);
            if (shearer_unwinnable_test(g)) {
                ++flagged;
                CHECK(decide_winnable(g).verdict == Verdict::Unwinnable);
            }
        }
        CHECK(flagged >= 5);
    }
}

TEST_CASE("directed cycles defeat a shearer-style converse") {
    for (int k : {3, 5, 7}) {
        ShearerReport rep = shearer_counterexample(k);
        CHECK(rep.k == k);
        CHECK(rep.colorings == Int(1) << k);
        CHECK(rep.all_wrong == 0);  // the identical plans always score
        CHECK(verify_strategy(rep.game, rep.strategy).wins);
        REQUIRE(rep.q_values.size() == (std::size_t{1} << k));
        const int full = (1 << k) - 1;
        for (int mask = 0; mask <= full; ++mask) {
            int bits = 0;
            for (int i = 0; i < k; ++i) bits += (mask >> i) & 1;
            const Rat expect = mask == full
                                   ? Rat(Int(1), Int(1) << (k - 1))
                                   : Rat(Int(1), Int(1) << bits);
            CHECK(rep.q_values[mask] == expect);
            CHECK(rep.q_values[mask] > 0);
        }
    }
    CHECK_THROWS_AS(shearer_counterexample(4), std::invalid_argument);
    CHECK_THROWS_AS(shearer_counterexample(1), std::invalid_argument);
}
