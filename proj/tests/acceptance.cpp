// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each check compares library output against an independent
// statement of the expected result.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hatgames/classifiers.hpp"
#include "hatgames/constructors.hpp"
#include "hatgames/hints.hpp"
#include "hatgames/lll.hpp"
#include "hatgames/oracle.hpp"
#include "hatgames/prisms.hpp"
#include "helpers.hpp"

using namespace hg;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Verdict oracle_verdict(const Game& g) { return decide_winnable(g).verdict; }

std::string vname(Verdict v) {
    switch (v) {
        case Verdict::Winnable: return "winnable";
        case Verdict::Unwinnable: return "unwinnable";
        default: return "unknown";
    }
}

// Every legal guessness vector for the given hatnesses, odometer order.
std::vector<std::vector<int>> legal_guesses(const std::vector<int>& h) {
    std::vector<std::vector<int>> out;
    std::vector<int> g(h.size(), 1);
    for (;;) {
        out.push_back(g);
        int i = static_cast<int>(h.size()) - 1;
        while (i >= 0 && ++g[i] >= h[i]) g[i--] = 1;
        if (i < 0) break;
    }
    return out;
}

std::vector<std::vector<int>> hat_vectors(int n, const std::vector<int>& choices) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(n, 0);
    for (;;) {
        std::vector<int> h(n);
        for (int i = 0; i < n; ++i) h[i] = choices[idx[i]];
        out.push_back(std::move(h));
        int i = n - 1;
        while (i >= 0 && ++idx[i] >= static_cast<int>(choices.size())) idx[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

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

bool construction_wins(const Construction& c) {
    c.game.validate();
    validate_strategy(c.game, c.strategy);
    return verify_strategy(c.game, c.strategy).wins;
}

Strategy random_full_strategy(const Game& game, std::mt19937& rng) {
    Strategy f;
    f.plans.resize(game.n());
    for (int v = 0; v < game.n(); ++v) {
        Plan& p = f.plans[v];
        p.vertex = v;
        p.order = game.d.out(v);
        const long long rows = table_size(game, p.order);
        std::vector<int> colors(game.h[v]);
        for (int c = 0; c < game.h[v]; ++c) colors[c] = c;
        for (long long r = 0; r < rows; ++r) {
            std::shuffle(colors.begin(), colors.end(), rng);
            std::vector<int> row(colors.begin(), colors.begin() + game.g[v]);
            std::sort(row.begin(), row.end());
            p.table.push_back(std::move(row));
        }
    }
    return f;
}

// 1. Cliques up to K3, h <= 4: winnable iff sum g/h >= 1.
Checker criterion_cliques() {
    Checker c;
    for (int n = 1; n <= 3 && c.ok; ++n)
        for (const auto& h : hat_vectors(n, {2, 3, 4}))
            for (const auto& g : legal_guesses(h)) {
                Game game = helpers::clique_game(h, g);
                Rat sum = 0;
                for (int v = 0; v < n; ++v) sum += game.ratio(v);
                const Verdict want =
                    sum >= 1 ? Verdict::Winnable : Verdict::Unwinnable;
                const Verdict got = oracle_verdict(game);
                c.expect(got == want, "K" + std::to_string(n) + " mismatch: got " +
                                          vname(got) + ", formula says " +
                                          vname(want));
                if (!c.ok) return c;
            }
    return c;
}

// 2. Directed cycles: classifier equals oracle for one-guess cycles with
// h in {2,3}, and for the equal-hatness directed triangle up to h = 6.
Checker criterion_directed_cycles() {
    Checker c;
    for (int k = 3; k <= 5 && c.ok; ++k)
        for (const auto& h : hat_vectors(k, {2, 3})) {
            Game game = helpers::dir_cycle_game(h, std::vector<int>(k, 1));
            Outcome cls = classify_directed_cycle(game);
            c.expect(cls.verdict != Verdict::Unknown, "classifier undecided");
            c.expect(cls.verdict == oracle_verdict(game),
                     "cycle k=" + std::to_string(k) + " disagreement");
            if (!c.ok) return c;
        }
    for (int k = 2; k <= 6 && c.ok; ++k) {
        Game game = helpers::dir_cycle_game({k, k, k}, {1, 1, 1});
        Outcome cls = classify_directed_cycle(game);
        c.expect(cls.verdict != Verdict::Unknown, "triangle classifier undecided");
        c.expect(cls.verdict == oracle_verdict(game),
                 "equal-hatness triangle h=" + std::to_string(k) + " disagreement");
    }
    return c;
}

// 3. One-guess trees up to 5 vertices, h in {2..5}: classifier equals oracle.
Checker criterion_latvian_trees() {
    Checker c;
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 220 && c.ok; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        std::vector<int> h(n);
        for (int& x : h) x = 2 + static_cast<int>(rng() % 4);
        Game game =
            helpers::tree_game(helpers::random_parents(n, rng), h,
                               std::vector<int>(n, 1));
        Outcome cls = classify_latvian_tree(game);
        c.expect(cls.verdict != Verdict::Unknown, "tree classifier undecided");
        c.expect(cls.verdict == oracle_verdict(game), "tree disagreement, n=" +
                                                          std::to_string(n));
    }
    return c;
}

// 4. One-guess cycles: k=4 exhaustive over h in {2,3,4}^4, k=5 sampled.
Checker criterion_latvian_cycles() {
    Checker c;
    for (const auto& h : hat_vectors(4, {2, 3, 4})) {
        Game game = helpers::undir_cycle_game(h, {1, 1, 1, 1});
        Outcome cls = classify_latvian_cycle(game);
        c.expect(cls.verdict != Verdict::Unknown, "C4 classifier undecided");
        c.expect(cls.verdict == oracle_verdict(game), "C4 disagreement");
        if (!c.ok) return c;
    }
    std::mt19937 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> h(5);
        for (int& x : h) x = 2 + static_cast<int>(rng() % 4);
        Game game = helpers::undir_cycle_game(h, {1, 1, 1, 1, 1});
        Outcome cls = classify_latvian_cycle(game);
        c.expect(cls.verdict != Verdict::Unknown, "C5 classifier undecided");
        c.expect(cls.verdict == oracle_verdict(game), "C5 disagreement");
        if (!c.ok) return c;
    }
    return c;
}

// 5. Constructor soundness on the worked examples, full verification.
Checker criterion_constructors() {
    Checker c;
    {
        Construction e = two_hat_edge("a", "b");
        Construction p3 = attach_vertex_clique(e.game, e.strategy, {1}, 2, 1, "c");
        Construction p4 = attach_vertex_clique(
            p3.game, p3.strategy, {p3.game.d.index_of("c")}, 2, 1, "d");
        std::vector<int> hs;
        for (const std::string& nm : {"a", "b", "c", "d"})
            hs.push_back(p4.game.h[p4.game.d.index_of(nm)]);
        c.expect(hs == std::vector<int>{2, 4, 4, 2}, "path (2,4,4,2) shape");
        c.expect(construction_wins(p4), "path (2,4,4,2) strategy loses");
    }
    {
        Construction e = two_hat_edge("a", "b");
        PathAttachment spec;
        spec.pattern = {3, 2};
        spec.x = {0};
        spec.z = {1};
        spec.z_clique = true;
        Construction out = attach_path(e.game, e.strategy, spec);
        std::vector<int> hs = out.game.h;
        std::sort(hs.begin(), hs.end());
        c.expect(out.game.n() == 4 && hs == std::vector<int>{2, 3, 3, 4},
                 "four-cycle (2,3,4,3) shape");
        c.expect(construction_wins(out), "four-cycle (2,3,4,3) strategy loses");
    }
    {
        const std::vector<std::vector<int>> shapes = {
            {0, 0, 1, 2, 3}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 1}};
        for (const std::vector<int>& parent : shapes) {
            Digraph td = helpers::named_vertices(5);
            for (int i = 1; i < 5; ++i) td.add_edge(i, parent[i]);
            Construction acc = two_hat_edge("v" + std::to_string(parent[1]), "v1");
            for (int i = 2; i < 5; ++i) {
                Construction e =
                    two_hat_edge("v" + std::to_string(parent[i]),
                                 "v" + std::to_string(i));
                acc = product_single_point(acc.game, acc.strategy, e.game,
                                           e.strategy,
                                           "v" + std::to_string(parent[i]));
            }
            bool shape_ok = acc.game.n() == 5;
            for (int v = 0; v < 5 && shape_ok; ++v) {
                const int tv = td.index_of(acc.game.d.name(v));
                shape_ok = acc.game.h[v] == (1 << td.out_degree(tv));
            }
            c.expect(shape_ok, "tree h=2^deg shape");
            c.expect(construction_wins(acc), "tree h=2^deg strategy loses");
            if (!c.ok) return c;
        }
    }
    {
        Construction e1 = two_hat_edge("a", "b");
        Construction e2 = two_hat_edge("c", "d");
        Construction prod = clique_product({e1, e2}, {{0, 1}, {0, 1}});
        bool shape_ok = prod.game.n() == 4 && is_complete(prod.game.d);
        for (int v = 0; v < prod.game.n(); ++v)
            shape_ok = shape_ok && prod.game.h[v] == 4;
        c.expect(shape_ok, "clique product shape");
        c.expect(construction_wins(prod), "clique product strategy loses");
    }
    {
        Digraph d = helpers::named_vertices(5);
        d.add_edge(0, 1);
        d.add_edge(2, 3);
        d.add_edge(4, 0);
        d.add_edge(4, 2);
        Game g = make_game(std::move(d), {2, 2, 2, 2, 5}, {1, 1, 1, 1, 1});
        Outcome solved = decide_winnable(g);
        c.expect(solved.verdict == Verdict::Winnable && solved.certificate,
                 "arc-replacement input not solved");
        if (!c.ok) return c;
        Construction out = replace_vertex_with_arcs(g, *solved.certificate, 4);
        c.expect(out.game.n() == 4, "arc replacement shape");
        c.expect(construction_wins(out), "arc replacement strategy loses");
    }
    return c;
}

// 6. Per-vertex correct counts equal g/h * |H| for any full strategy.
Checker criterion_win_counts() {
    Checker c;
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 20 && c.ok) {
        Game game = helpers::random_game(5, 6, rng, rng() % 2 == 0);
        const Int total = coloring_count(game);
        if (total > 1'000'000) continue;
        Strategy f = random_full_strategy(game, rng);
        std::vector<Int> counts = win_counts(game, f);
        for (int v = 0; v < game.n(); ++v)
            c.expect(counts[v] * game.h[v] == Int(game.g[v]) * total,
                     "count mismatch at vertex " + std::to_string(v));
        ++done;
    }
    return c;
}

// 7. Odd one-guess directed cycles on 2 hats: the follow-the-arc strategy
// wins while the acyclicity polynomial stays positive everywhere.
Checker criterion_shearer_counterexample() {
    Checker c;
    for (int k : {3, 5, 7}) {
        ShearerReport rep = shearer_counterexample(k);
        c.expect(rep.all_wrong == 0, "all-wrong count nonzero");
        c.expect(rep.colorings == Int(1) << k, "coloring count");
        c.expect(verify_strategy(rep.game, rep.strategy).wins,
                 "identical plans lose");
        const int full = (1 << k) - 1;
        for (int mask = 0; mask <= full && c.ok; ++mask) {
            const int bits = __builtin_popcount(mask);
            const Rat want = mask == full ? Rat(1, Int(1) << (k - 1))
                                          : Rat(1, Int(1) << bits);
            c.expect(rep.q_values[mask] == want,
                     "q value mismatch, k=" + std::to_string(k));
        }
        if (!c.ok) return c;
    }
    return c;
}

// 8. Smallest uncoverable sets have size prod (a_i + 1), witnessed by a
// product set.
Checker criterion_min_sprawl() {
    Checker c;
    const std::vector<std::vector<int>> cases = {{1, 1}, {1, 2}, {2, 2}};
    for (const std::vector<int>& a : cases) {
        std::vector<int> box(a.size());
        std::size_t want = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            box[i] = a[i] + 1;
            want *= static_cast<std::size_t>(a[i] + 1);
        }
        auto ms = min_sprawl(box, a);
        c.expect(ms.has_value(), "no uncoverable set found");
        if (!c.ok) return c;
        c.expect(ms->size == want && ms->witness.size() == want,
                 "sprawl size mismatch");
        c.expect(!find_cover(ms->witness, a).covered, "witness is coverable");
        std::vector<std::set<int>> axes(a.size());
        for (const Point& p : ms->witness)
            for (std::size_t i = 0; i < a.size(); ++i) axes[i].insert(p[i]);
        std::size_t prod = 1;
        for (const auto& s : axes) prod *= s.size();
        c.expect(prod == want, "witness is not a product set");
        if (!c.ok) return c;
    }
    return c;
}

// 9. Star packing decides star games: all stars with <= 3 leaves, h <= 4,
// plus the one-guess doubling boundary.
Checker criterion_star_packing() {
    Checker c;
    std::vector<std::pair<int, int>> params;  // legal (h, g) pairs
    for (int h = 2; h <= 4; ++h)
        for (int g = 1; g < h; ++g) params.emplace_back(h, g);
    std::set<std::vector<int>> seen;
    for (auto [ch, cg] : params)
        for (int leaves = 1; leaves <= 3; ++leaves) {
            std::vector<int> idx(leaves, 0);
            for (;;) {
                std::vector<int> key{ch, cg};
                std::vector<int> sorted = idx;
                std::sort(sorted.begin(), sorted.end());
                for (int i : sorted) key.push_back(i);
                if (seen.insert(key).second) {
                    std::vector<std::pair<int, int>> lv;
                    for (int i : idx) lv.push_back(params[i]);
                    Game game = helpers::star_game(ch, cg, lv);
                    const Verdict got = star_outcome(game).verdict;
                    c.expect(got != Verdict::Unknown, "star packing undecided");
                    c.expect(got == oracle_verdict(game), "star disagreement");
                    if (!c.ok) return c;
                }
                int i = leaves - 1;
                while (i >= 0 && ++idx[i] >= static_cast<int>(params.size()))
                    idx[i--] = 0;
                if (i < 0) break;
            }
        }
    for (int n = 1; n <= 3; ++n) {
        const std::vector<std::pair<int, int>> lv(n, {2, 1});
        Game at = helpers::star_game(1 << n, 1, lv);
        Game above = helpers::star_game((1 << n) + 1, 1, lv);
        c.expect(star_outcome(at).verdict == Verdict::Winnable &&
                     oracle_verdict(at) == Verdict::Winnable,
                 "boundary 2^n not winnable, n=" + std::to_string(n));
        c.expect(star_outcome(above).verdict == Verdict::Unwinnable &&
                     oracle_verdict(above) == Verdict::Unwinnable,
                 "boundary 2^n+1 not unwinnable, n=" + std::to_string(n));
        if (!c.ok) return c;
    }
    return c;
}

// 10. Every probabilistically flagged game really is unwinnable.
Checker criterion_probabilistic_soundness() {
    Checker c;
    std::mt19937 rng(1331);
    int flagged = 0;
    for (int trial = 0; trial < 100'000 && flagged < 50 && c.ok; ++trial) {
        const bool undirected = trial % 2 == 0;
        Game game = helpers::random_game(4, 5, rng, undirected);
        bool flag = lll_unwinnable_test(game).unwinnable;
        if (!flag && is_undirected(game.d)) flag = shearer_unwinnable_test(game);
        if (!flag) continue;
        ++flagged;
        c.expect(oracle_verdict(game) == Verdict::Unwinnable,
                 "flagged game is winnable");
    }
    c.expect(flagged >= 50, "only " + std::to_string(flagged) + " games flagged");
    return c;
}

// 11. A winning hint at any vertex exists exactly when the game is winnable.
Checker criterion_hint_equivalence() {
    Checker c;
    for (int n = 1; n <= 3 && c.ok; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) pairs.emplace_back(i, j);
        const int m = static_cast<int>(pairs.size());
        for (int mask = 0; mask < (1 << m) && c.ok; ++mask)
            for (const auto& h : hat_vectors(n, {2, 3}))
                for (const auto& g : legal_guesses(h)) {
                    Digraph d = helpers::named_vertices(n);
                    for (int i = 0; i < m; ++i)
                        if (mask & (1 << i)) d.add_arc(pairs[i].first, pairs[i].second);
                    Game game = make_game(std::move(d), h, g);
                    const Verdict want = oracle_verdict(game);
                    for (int v = 0; v < n; ++v) {
                        const Verdict got = exists_winning_hint(game, v).verdict;
                        c.expect(got == want, "hint mismatch at vertex " +
                                                  std::to_string(v));
                        if (!c.ok) return c;
                    }
                }
    }
    return c;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Checker()> run;
    };
    const std::vector<Criterion> criteria = {
        {"clique formula vs oracle, K_n n<=3, h<=4", criterion_cliques},
        {"directed cycle classifier vs oracle", criterion_directed_cycles},
        {"one-guess tree classifier vs oracle, >=200 samples",
         criterion_latvian_trees},
        {"one-guess cycle classifier vs oracle, C4 exhaustive + C5 sample",
         criterion_latvian_cycles},
        {"constructor soundness on worked examples", criterion_constructors},
        {"exact per-vertex win counts, 20 random pairs", criterion_win_counts},
        {"odd directed cycle beats the positive polynomial",
         criterion_shearer_counterexample},
        {"minimum uncoverable set sizes", criterion_min_sprawl},
        {"star packing equals winnability", criterion_star_packing},
        {"probabilistic flags confirmed unwinnable, >=50 games",
         criterion_probabilistic_soundness},
        {"winning hints exist iff winnable, |V|<=3 exhaustive",
         criterion_hint_equivalence},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Checker c;
        try {
            c = criteria[i].run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        std::printf("%s %2zu %s (%.1fs)%s%s\n", c.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, secs, c.ok ? "" : " -- ",
                    c.ok ? "" : c.detail.c_str());
        std::fflush(stdout);
        if (!c.ok) ++failures;
    }
    return failures;
}
