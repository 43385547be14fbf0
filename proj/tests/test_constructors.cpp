#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatgames/classifiers.hpp"
#include "hatgames/constructors.hpp"
#include "hatgames/oracle.hpp"
#include "helpers.hpp"

using namespace hg;

namespace {

Construction two_hat_edge(const std::string& a, const std::string& b) {
    Digraph d;
    d.add_vertex(a);
    d.add_vertex(b);
    d.add_edge(0, 1);
    Game g = make_game(std::move(d), {2, 2}, {1, 1});
    Strategy f;
    f.plans = {Plan{0, {1}, {{1}, {0}}}, Plan{1, {0}, {{0}, {1}}}};
    return {std::move(g), std::move(f)};
}

void check_wins(const Construction& c) {
    c.game.validate();
    validate_strategy(c.game, c.strategy);
    VerifyResult r = verify_strategy(c.game, c.strategy);
    CHECK(r.wins);
}

}  // namespace

TEST_CASE("product over a single shared point") {
    Construction ab = two_hat_edge("a", "b");
    Construction bc = two_hat_edge("b", "c");
    Construction path =
        product_single_point(ab.game, ab.strategy, bc.game, bc.strategy, "b");
    CHECK(path.game.n() == 3);
    const int b = path.game.d.index_of("b");
    REQUIRE(b >= 0);
    CHECK(path.game.h[b] == 4);
    CHECK(path.game.g[b] == 1);
    CHECK(is_forest(path.game.d));
    check_wins(path);

    SUBCASE("iterating yields the doubled-hatness tree") {
        Construction cd = two_hat_edge("b", "d");
        Construction star =
            product_single_point(path.game, path.strategy, cd.game, cd.strategy,
                                 "b");
        CHECK(star.game.h[star.game.d.index_of("b")] == 8);
        check_wins(star);
    }
    SUBCASE("overlap beyond the shared point is rejected") {
        Construction ab2 = two_hat_edge("a", "b");
        CHECK_THROWS_AS(product_single_point(ab.game, ab.strategy, ab2.game,
                                             ab2.strategy, "b"),
                        std::invalid_argument);
    }
}

TEST_CASE("clique product of two edges is a four-clique") {
    Construction e1 = two_hat_edge("a", "b");
    Construction e2 = two_hat_edge("c", "d");
    Construction prod = clique_product({e1, e2}, {{0, 1}, {0, 1}});
    CHECK(prod.game.n() == 4);
    CHECK(is_complete(prod.game.d));
    for (int v = 0; v < 4; ++v) {
        CHECK(prod.game.h[v] == 4);
        CHECK(prod.game.g[v] == 1);
    }
    check_wins(prod);
}

TEST_CASE("attaching a vertex to a clique scales it") {
    Construction e = two_hat_edge("a", "b");
    Construction out =
        attach_vertex_clique(e.game, e.strategy, {0, 1}, 2, 1, "x");
    CHECK(out.game.n() == 3);
    const int a = out.game.d.index_of("a"), x = out.game.d.index_of("x");
    REQUIRE(a >= 0);
    REQUIRE(x >= 0);
    CHECK(out.game.h[a] == 4);
    CHECK(out.game.h[x] == 2);
    CHECK(out.game.d.has_arc(x, a));
    check_wins(out);

    SUBCASE("repeated clique attachments build the (2,4,4,2) path") {
        Construction p3 =
            attach_vertex_clique(e.game, e.strategy, {1}, 2, 1, "c");
        Construction p4 = attach_vertex_clique(
            p3.game, p3.strategy, {p3.game.d.index_of("c")}, 2, 1, "d");
        REQUIRE(p4.game.n() == 4);
        std::vector<int> hs;
        for (const std::string& nm : {"a", "b", "c", "d"})
            hs.push_back(p4.game.h[p4.game.d.index_of(nm)]);
        CHECK(hs == std::vector<int>{2, 4, 4, 2});
        check_wins(p4);
    }
}

TEST_CASE("general attachment raises parameters additively") {
    Construction e = two_hat_edge("a", "b");
    Construction out = attach_vertex_general(e.game, e.strategy, {0}, {0}, {1},
                                             2, 1, "x");
    const int a = out.game.d.index_of("a");
    CHECK(out.game.h[a] == 3);
    CHECK(out.game.g[a] == 1);
    CHECK(out.game.h[out.game.d.index_of("x")] == 2);
    check_wins(out);

    SUBCASE("guess inequality violations are rejected") {
        CHECK_THROWS_AS(attach_vertex_general(e.game, e.strategy, {0}, {0}, {9},
                                              2, 1, "x"),
                        std::invalid_argument);
    }
    SUBCASE("empty attachment set is an isolated extra sage") {
        Construction iso =
            attach_vertex_general(e.game, e.strategy, {}, {}, {}, 3, 1, "x");
        CHECK(iso.game.n() == 3);
        check_wins(iso);
    }
}

TEST_CASE("hatness-3 attachment") {
    Construction e = two_hat_edge("a", "b");
    Construction out = attach_hatness3(e.game, e.strategy, {0, 1}, 1, "x");
    const int a = out.game.d.index_of("a"), b = out.game.d.index_of("b");
    CHECK(out.game.h[a] == 3);
    CHECK(out.game.h[b] == 2);
    CHECK(out.game.h[out.game.d.index_of("x")] == 3);
    check_wins(out);
    CHECK_THROWS_AS(attach_hatness3(e.game, e.strategy, {0}, 1, "x"),
                    std::invalid_argument);
}

TEST_CASE("weak path closes the (2,3,4,3) four-cycle") {
    Construction e = two_hat_edge("a", "b");
    PathAttachment spec;
    spec.pattern = {3, 2};
    spec.x = {0};
    spec.z = {1};
    spec.z_clique = true;
    Construction out = attach_path(e.game, e.strategy, spec);
    REQUIRE(out.game.n() == 4);
    std::vector<int> order;
    REQUIRE(is_undirected_cycle(out.game.d, &order));
    std::vector<int> hs;
    for (int v : order) hs.push_back(out.game.h[v]);
    std::sort(hs.begin(), hs.end());
    CHECK(hs == std::vector<int>{2, 3, 3, 4});
    CHECK(out.game.h[out.game.d.index_of("b")] == 4);
    CHECK(out.game.h[out.game.d.index_of("a")] == 3);
    check_wins(out);
}

TEST_CASE("weak path with trailing fours") {
    Construction e = two_hat_edge("a", "b");
    PathAttachment spec;
    spec.pattern = {2, 3, 4};
    spec.x = {0};
    spec.z = {1};
    spec.z_clique = true;
    Construction out = attach_path(e.game, e.strategy, spec);
    REQUIRE(out.game.n() == 5);
    CHECK(out.game.h[out.game.d.index_of("p1")] == 2);
    CHECK(out.game.h[out.game.d.index_of("p2")] == 3);
    CHECK(out.game.h[out.game.d.index_of("p3")] == 4);
    CHECK(out.game.h[out.game.d.index_of("a")] == 3);
    CHECK(out.game.h[out.game.d.index_of("b")] == 4);
    check_wins(out);
}

TEST_CASE("strong path closes a long cycle") {
    Construction e = two_hat_edge("a", "b");
    PathAttachment spec;
    spec.pattern = {4, 3, 2, 3, 4};
    spec.x = {0};
    spec.x_clique = true;
    spec.z = {1};
    spec.z_clique = true;
    Construction out = attach_path(e.game, e.strategy, spec);
    REQUIRE(out.game.n() == 7);
    std::vector<int> order;
    CHECK(is_undirected_cycle(out.game.d, &order));
    CHECK(out.game.h[out.game.d.index_of("a")] == 4);
    CHECK(out.game.h[out.game.d.index_of("b")] == 4);
    CHECK(out.game.h[out.game.d.index_of("p3")] == 2);
    check_wins(out);
}

TEST_CASE("clique against an independent side") {
    Construction e1 = two_hat_edge("a", "b");
    Construction e2 = two_hat_edge("c", "d");
    Construction out = clique_general_product(e1.game, e1.strategy, {0, 1},
                                              e2.game, e2.strategy, {0});
    CHECK(out.game.n() == 3);
    CHECK(is_complete(out.game.d));
    std::vector<int> hs = out.game.h;
    std::sort(hs.begin(), hs.end());
    CHECK(hs == std::vector<int>{2, 4, 4});
    check_wins(out);

    CHECK_THROWS_AS(clique_general_product(e1.game, e1.strategy, {0, 1},
                                           e2.game, e2.strategy, {0, 1}),
                    std::invalid_argument);
}

TEST_CASE("general product of two edges is the boundary star") {
    Construction e1 = two_hat_edge("a", "b");
    Construction e2 = two_hat_edge("c", "d");
    Construction out = general_product({e1, e2}, {{0}, {0}}, {0, 0});
    CHECK(out.game.n() == 3);
    int center = -1;
    REQUIRE(is_star(out.game.d, &center));
    CHECK(out.game.h[center] == 4);
    CHECK(out.game.g[center] == 1);
    check_wins(out);

    SUBCASE("surplus sums of one or more are rejected") {
        CHECK_THROWS_AS(general_product({e1, e2}, {{0, 1}, {0, 1}}, {1, 1}),
                        std::invalid_argument);
    }
}

TEST_CASE("replacing a directionless vertex with peer arcs") {
    SUBCASE("cheap leaf next to an edge") {
        Digraph d = helpers::named_vertices(3);  // v0 - v1 - v2 path
        d.add_edge(0, 1);
        d.add_edge(1, 2);
        Game g = make_game(std::move(d), {2, 2, 3}, {1, 1, 1});
        Outcome o = classify_auto(g);
        // Reduction rewrites would drop the certificate: build one directly.
        Strategy f;
        f.plans.resize(3);
        f.plans[0] = Plan{0, {1}, {{1}, {0}}};
        f.plans[1] = {1, {0, 2}, {}};
        for (int c0 = 0; c0 < 2; ++c0)
            for (int c2 = 0; c2 < 3; ++c2) f.plans[1].table.push_back({c0});
        f.plans[2] = constant_plan(g, 2);
        REQUIRE(verify_strategy(g, f).wins);
        Construction out = replace_vertex_with_arcs(g, f, 2);
        CHECK(out.game.n() == 2);
        CHECK(out.game.d.has_arc(out.game.d.index_of("v1"),
                                 out.game.d.index_of("v0")));
        check_wins(out);
        CHECK(o.verdict == Verdict::Winnable);
    }
    SUBCASE("vertex joining two disjoint edges") {
        Digraph d = helpers::named_vertices(5);  // a-b, c-d, v adjacent a and c
        d.add_edge(0, 1);
        d.add_edge(2, 3);
        d.add_edge(4, 0);
        d.add_edge(4, 2);
        Game g = make_game(std::move(d), {2, 2, 2, 2, 5}, {1, 1, 1, 1, 1});
        Outcome solved = decide_winnable(g);
        REQUIRE(solved.verdict == Verdict::Winnable);
        Construction out = replace_vertex_with_arcs(g, *solved.certificate, 4);
        CHECK(out.game.n() == 4);
        // v0 and v2 became peers watching the union of their neighborhoods.
        CHECK(out.game.d.out(0) == out.game.d.out(2));
        check_wins(out);
    }
    SUBCASE("ratio bound is enforced") {
        Digraph d = helpers::named_vertices(3);
        d.add_edge(0, 1);
        d.add_edge(1, 2);
        Game g = make_game(std::move(d), {2, 2, 2}, {1, 1, 1});
        Outcome solved = decide_winnable(g);
        REQUIRE(solved.verdict == Verdict::Winnable);
        CHECK_THROWS_AS(replace_vertex_with_arcs(g, *solved.certificate, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("losing operand strategies are rejected") {
    Game g = helpers::clique_game({2, 2}, {1, 1});
    Strategy lose = constant_strategy(g);
    CHECK_THROWS_AS(attach_vertex_clique(g, lose, {0, 1}, 2, 1, "x"),
                    std::invalid_argument);
}
