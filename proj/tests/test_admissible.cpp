#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatgames/admissible.hpp"
#include "hatgames/oracle.hpp"
#include "helpers.hpp"

using namespace hg;

TEST_CASE("warsaw graph shape") {
    Game g = helpers::path_game({3, 2}, {1, 1});
    WarsawGraph w = build_warsaw(g);
    CHECK(w.vertex_count == 5);
    CHECK(w.arc_count == 2 * 3 * 2 / 2 + 2 * 3 * 2 / 2);  // both arc directions
    CHECK(w.id(1, 1) == 4);
    CHECK(w.decode(4) == std::pair<int, int>{1, 1});
}

TEST_CASE("admissible path states") {
    Game g = helpers::path_game({2, 2, 2}, {1, 1, 1});
    Strategy f = constant_strategy(g);  // everyone guesses 0
    PathState all_wrong{f, {0, 1, 2}, {1, 1, 1}};
    CHECK(is_admissible(g, all_wrong));
    PathState middle_right{f, {0, 1, 2}, {1, 0, 1}};
    CHECK_FALSE(is_admissible(g, middle_right));
    // Endpoint colors are quasi: sage 0 is right but her neighborhood is
    // only partly covered on the one-vertex path.
    PathState endpoint{f, {0}, {0}};
    CHECK(is_admissible(g, endpoint));
}

TEST_CASE("continuations filter by wrongness") {
    Game g = helpers::path_game({2, 2, 2}, {1, 1, 1});
    Strategy f = constant_strategy(g);
    PathState s{f, {0, 1}, {1, 1}};
    Continuations c = continuations(g, s, Direction::Right);
    CHECK(c.next_base == 2);
    // Entering slab 2 completes sage 2's own view (she sees only sage 1), so
    // her wrongness is enforced too: color 0 is excluded.
    CHECK(c.colors == std::vector<int>{1});

    PathState right_mid{f, {0, 1}, {1, 0}};
    c = continuations(g, right_mid, Direction::Right);
    // Sage 1 holds her guessed color: no continuation keeps the path
    // admissible.
    CHECK(c.colors.empty());
}

TEST_CASE("path search agrees with the oracle on paths and cycles") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 3u);
        std::vector<int> h(n), g(n, 1);
        for (int& x : h) x = 2 + static_cast<int>(rng() % 3u);
        Game game = (trial % 2 == 0 && n >= 3)
                        ? helpers::undir_cycle_game(h, g)
                        : helpers::path_game(h, g);
        Outcome o = decide_winnable(game);
        if (o.verdict == Verdict::Winnable) {
            CHECK_FALSE(find_disprover_via_paths(game, *o.certificate));
        } else {
            Strategy f = constant_strategy(game);
            auto d = find_disprover_via_paths(game, f);
            REQUIRE(d);
            for (int v = 0; v < game.n(); ++v)
                CHECK_FALSE(guesses_right(game, f, v, *d));
        }
    }
}

TEST_CASE("grow_path reports blocked hypotheses") {
    Game g = helpers::path_game({2, 2, 2, 2}, {1, 1, 1, 1});
    Strategy f = constant_strategy(g);
    PathState seed{f, {0}, {1}};
    GrowResult r = grow_path(g, f, seed, 3);
    // Two-hat slabs ahead violate the h >= 3 growth hypothesis.
    CHECK_FALSE(r.grown);
    CHECK_FALSE(r.blocked.empty());

    Game wide = helpers::path_game({2, 3, 3, 3}, {1, 1, 1, 1});
    Strategy fw = constant_strategy(wide);
    GrowResult rw = grow_path(wide, fw, PathState{fw, {0}, {1}}, 3);
    CHECK(rw.grown);
    CHECK(is_admissible(wide, rw.state));
}
