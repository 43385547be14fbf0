#include "hatgames/classifiers.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>

#include "hatgames/constructors.hpp"
#include "hatgames/ease.hpp"

namespace hg {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Winnable: return "winnable";
        case Verdict::Unwinnable: return "unwinnable";
        default: return "unknown";
    }
}

namespace {

bool directionless(const Digraph& d, int v) { return d.out(v) == d.in(v); }

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Game drop_vertices(const Game& game, const std::vector<int>& del) {
    std::vector<char> gone(game.n(), 0);
    for (int v : del) gone[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < game.n(); ++v)
        if (!gone[v]) keep.push_back(v);
    return restrict_game(game, keep);
}

Rat frac(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return r - Rat(q);
}

}  // namespace

ReductionTrace reduce_game(const Game& game) {
    game.validate();
    ReductionTrace tr{{}, game, std::nullopt};
    Game& cur = tr.residual;
    for (bool changed = true; changed && cur.n() > 0;) {
        changed = false;
        std::vector<int> comp_size(cur.n(), 0);
        for (const std::vector<int>& comp : strong_components(cur.d))
            for (int v : comp) comp_size[v] = static_cast<int>(comp.size());

        for (int v = 0; v < cur.n() && !changed; ++v) {
            if (comp_size[v] != 1) continue;
            bool redundant = true;
            for (int u : cur.d.in(v))
                redundant = redundant && subset_of(cur.d.out(v), cur.d.out(u));
            if (!redundant) continue;
            tr.steps.push_back({"redundant-vision", {cur.d.name(v)}, ""});
            cur = drop_vertices(cur, {v});
            changed = true;
        }
        for (int v = 0; v < cur.n() && !changed; ++v) {
            Int prod = cur.g[v];
            for (int u : cur.d.out(v)) prod *= cur.h[u];
            if (Int(cur.h[v]) <= prod) continue;
            tr.steps.push_back({"high-ratio", {cur.d.name(v)}, ""});
            cur = drop_vertices(cur, {v});
            changed = true;
        }
        for (int v = 0; v < cur.n() && !changed; ++v) {
            if (!directionless(cur.d, v) ||
                !is_independent_subset(cur.d, cur.d.out(v)))
                continue;
            Int prod = cur.g[v];
            for (int u : cur.d.out(v)) prod *= cur.g[u] + 1;
            if (Int(cur.h[v]) <= prod) continue;
            tr.steps.push_back({"peer-deletion", {cur.d.name(v)}, ""});
            cur = drop_vertices(cur, {v});
            changed = true;
        }
        for (int v = 0; v < cur.n() && !changed; ++v) {
            if (!directionless(cur.d, v) || cur.d.out(v).size() != 1 ||
                cur.h[v] != 2 || cur.g[v] != 1)
                continue;
            const int u = cur.d.out(v)[0];
            const int nh = (cur.h[u] + 1) / 2;
            tr.steps.push_back({"leaf-collapse",
                                {cur.d.name(v), cur.d.name(u)},
                                "h(" + cur.d.name(u) + "): " +
                                    std::to_string(cur.h[u]) + " -> " +
                                    std::to_string(nh)});
            if (nh <= cur.g[u]) {
                tr.steps.push_back({"hatness-collapse", {cur.d.name(u)}, ""});
                tr.decided = Verdict::Winnable;
                return tr;
            }
            const std::string uname = cur.d.name(u);
            cur = drop_vertices(cur, {v});
            cur.h[cur.d.index_of(uname)] = nh;
            changed = true;
        }
        if (!changed) {
            std::vector<int> singles;
            std::vector<std::string> names;
            for (int v = 0; v < cur.n(); ++v)
                if (comp_size[v] == 1) {
                    singles.push_back(v);
                    names.push_back(cur.d.name(v));
                }
            if (!singles.empty()) {
                tr.steps.push_back({"acyclic-strip", std::move(names), ""});
                cur = drop_vertices(cur, singles);
                changed = true;
            }
        }
    }
    return tr;
}

Outcome classify_clique(const Game& game) {
    game.validate();
    if (!is_complete(game.d))
        throw std::invalid_argument("classify_clique: not a complete graph");
    Rat sum = 0;
    for (int v = 0; v < game.n(); ++v) sum += game.ratio(v);
    if (sum < 1) return Outcome::unwinnable("clique-ratio-below-one");

    // Window j is [s_j, s_j + g_j/h_j) mod 1; the windows tile the circle,
    // and sage j is right exactly when the total fractional weight lands in
    // hers.
    std::vector<Rat> pre(game.n() + 1, Rat(0));
    for (int v = 0; v < game.n(); ++v) pre[v + 1] = pre[v] + game.ratio(v);
    Strategy f;
    f.plans.resize(game.n());
    for (int v = 0; v < game.n(); ++v) {
        Plan& p = f.plans[v];
        p.vertex = v;
        p.order = game.d.out(v);
        for (ColoringIter it(game, p.order); it.valid(); it.advance()) {
            Rat q = -pre[v];
            for (std::size_t i = 0; i < p.order.size(); ++i)
                q += Rat(it.tuple()[i], game.h[p.order[i]]);
            std::vector<int> row;
            for (int x = 0; x < game.h[v]; ++x)
                if (frac(q + Rat(x, game.h[v])) < game.ratio(v)) row.push_back(x);
            if (static_cast<int>(row.size()) != game.g[v])
                throw std::logic_error("classify_clique: window size mismatch");
            p.table.push_back(std::move(row));
        }
    }
    Outcome o = Outcome::winnable(std::move(f));
    o.trace.push_back({"clique-interval", {}, ""});
    return o;
}

namespace {

// Directed cycle on h(v) = 2 everywhere: one sage copies her out-neighbor,
// the rest negate.
Strategy two_hat_cycle_strategy(const Game& game, const std::vector<int>& seq) {
    const int k = static_cast<int>(seq.size());
    Strategy f;
    f.plans.resize(game.n());
    for (int i = 0; i < k; ++i) {
        Plan& p = f.plans[seq[i]];
        p.vertex = seq[i];
        p.order = game.d.out(seq[i]);
        p.table = {{i == 0 ? 0 : 1}, {i == 0 ? 1 : 0}};
    }
    return f;
}

Game with_params(const Game& game, std::vector<int> h, std::vector<int> g) {
    Digraph d = game.d;
    return make_game(std::move(d), std::move(h), std::move(g));
}

Strategy scale_all(const Game& base, Strategy f, const std::vector<int>& ks,
                   Game* out_game) {
    Game cur = base;
    for (int v = 0; v < base.n(); ++v) {
        if (ks[v] == 1) continue;
        std::vector<int> h = cur.h, g = cur.g;
        h[v] *= ks[v];
        g[v] *= ks[v];
        Game nxt = with_params(cur, std::move(h), std::move(g));
        f = lift_strategy(cur, f, nxt, ScaleVertexWitness{v, ks[v]});
        cur = std::move(nxt);
    }
    *out_game = std::move(cur);
    return f;
}

}  // namespace

Outcome classify_directed_cycle(const Game& game) {
    game.validate();
    std::vector<int> seq;
    if (!is_directed_cycle(game.d, &seq))
        throw std::invalid_argument("classify_directed_cycle: not a directed cycle");
    const int k = game.n();

    if (game.is_latvian()) {
        const bool all2 =
            std::all_of(game.h.begin(), game.h.end(), [](int h) { return h == 2; });
        if (!all2) return Outcome::unwinnable("directed-cycle-hatness");
        Outcome o = Outcome::winnable(two_hat_cycle_strategy(game, seq));
        o.trace.push_back({"directed-cycle-two-hats", {}, ""});
        return o;
    }
    if (game.is_polish()) {
        const int h = game.h[0], g = game.g[0];
        if (h > 2 * g) return Outcome::unwinnable("directed-cycle-hatness");
        Game base = with_params(game, std::vector<int>(k, 2), std::vector<int>(k, 1));
        Strategy f = two_hat_cycle_strategy(base, seq);
        Game scaled;
        f = scale_all(base, std::move(f), std::vector<int>(k, g), &scaled);
        if (h < 2 * g)
            f = lift_strategy(scaled, f, game, LowerHatnessWitness{});
        Outcome o = Outcome::winnable(std::move(f));
        o.trace.push_back({"directed-cycle-doubling", {}, ""});
        return o;
    }
    if (k == 3 && game.h[0] == game.h[1] && game.h[1] == game.h[2]) {
        const int hk = game.h[0];
        // One distinguished sage with guessness l, the other two with k - l.
        for (int c = 0; c < 3; ++c) {
            const int l = game.g[c];
            bool match = true;
            for (int v = 0; v < 3; ++v)
                if (v != c) match = match && game.g[v] == hk - l;
            if (!match) continue;
            if (hk % l != 0)
                return Outcome::unwinnable("directed-cycle-divisibility");
            const int m = hk / l;
            Game base = with_params(
                game, std::vector<int>(3, m),
                [&] {
                    std::vector<int> g(3, m - 1);
                    g[c] = 1;
                    return g;
                }());
            Strategy f;
            f.plans.resize(3);
            for (int v = 0; v < 3; ++v) {
                Plan& p = f.plans[v];
                p.vertex = v;
                p.order = base.d.out(v);
                for (int col = 0; col < m; ++col) {
                    std::vector<int> row;
                    for (int x = 0; x < m; ++x)
                        if ((v == c) == (x == col)) row.push_back(x);
                    p.table.push_back(std::move(row));
                }
            }
            Game scaled;
            f = scale_all(base, std::move(f), std::vector<int>(3, l), &scaled);
            Outcome o = Outcome::winnable(std::move(f));
            o.trace.push_back({"directed-triangle-divisibility", {}, ""});
            return o;
        }
    }
    for (int i = 0; i < k; ++i) {
        const int v = seq[i], u = seq[(i + 1) % k];
        if (1 - game.ratio(v) > game.ratio(u)) {
            Outcome o = Outcome::unwinnable("directed-cycle-arc-ratio");
            o.trace.back().vertices = {game.d.name(v), game.d.name(u)};
            return o;
        }
    }
    return Outcome::unknown("directed-cycle-uncategorized");
}

Outcome classify_latvian_tree(const Game& game) {
    game.validate();
    if (!game.is_latvian() || !is_forest(game.d))
        throw std::invalid_argument("classify_latvian_tree: not a Latvian forest");

    Game cur = game;
    std::vector<TraceStep> steps;
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < cur.n(); ++v) {
            const int deg = cur.d.out_degree(v);
            if (deg < 31 && cur.h[v] > (1 << deg)) {
                steps.push_back({"tree-hatness-bound", {cur.d.name(v)}, ""});
                cur = drop_vertices(cur, {v});
                changed = true;
                break;
            }
        }
    }
    if (cur.n() == 0) {
        Outcome o = Outcome::unwinnable("tree-exhausted");
        o.trace.insert(o.trace.begin(), steps.begin(), steps.end());
        return o;
    }

    // Pick one residual component (always >= 2 vertices) and realize its
    // doubled-hatness bound as a product of two-hat edge games.
    std::vector<int> comp = strong_components(cur.d).front();
    std::vector<char> in_comp(cur.n(), 0);
    for (int v : comp) in_comp[v] = 1;
    std::vector<int> bfs{comp[0]}, parent{-1};
    std::vector<char> seen(cur.n(), 0);
    seen[comp[0]] = 1;
    for (std::size_t i = 0; i < bfs.size(); ++i)
        for (int u : cur.d.out(bfs[i]))
            if (in_comp[u] && !seen[u]) {
                seen[u] = 1;
                bfs.push_back(u);
                parent.push_back(bfs[i]);
            }

    Int table_cost = 1;
    for (int v : comp) {
        int deg = 0;
        for (int u : cur.d.out(v)) deg += in_comp[u];
        table_cost *= Int(1) << std::min(deg, 40);
    }
    if (table_cost > 4'000'000) {
        Outcome o;
        o.verdict = Verdict::Winnable;
        o.trace = std::move(steps);
        o.trace.push_back({"certificate-omitted", {}, "component too large"});
        return o;
    }

    auto edge_game = [&](const std::string& a, const std::string& b) {
        Digraph d;
        d.add_vertex(a);
        d.add_vertex(b);
        d.add_edge(0, 1);
        Game eg = make_game(std::move(d), {2, 2}, {1, 1});
        Strategy ef;
        ef.plans.resize(2);
        ef.plans[0] = {0, {1}, {{1}, {0}}};
        ef.plans[1] = {1, {0}, {{0}, {1}}};
        return Construction{std::move(eg), std::move(ef)};
    };
    Construction built = edge_game(cur.d.name(bfs[0]), cur.d.name(bfs[1]));
    for (std::size_t i = 2; i < bfs.size(); ++i) {
        Construction leaf =
            edge_game(cur.d.name(parent[i]), cur.d.name(bfs[i]));
        built = product_single_point(built.game, built.strategy, leaf.game,
                                     leaf.strategy, cur.d.name(parent[i]));
    }
    std::vector<int> low_h(built.game.n());
    for (int v = 0; v < built.game.n(); ++v)
        low_h[v] = cur.h[cur.d.index_of(built.game.d.name(v))];
    Game lowered = with_params(built.game, std::move(low_h), built.game.g);
    Strategy f =
        lift_strategy(built.game, built.strategy, lowered, LowerHatnessWitness{});
    f = lift_strategy(lowered, f, game, ExtendWitness{});
    Outcome o = Outcome::winnable(std::move(f));
    o.trace = std::move(steps);
    o.trace.push_back({"tree-edge-products", {}, ""});
    return o;
}

namespace {

// Maximal winnable hatness sequences of the Latvian four-cycle, up to
// rotation and reflection; 0 stands for "any hatness".
const std::vector<std::vector<int>> kFourCycleMaximal = {
    {3, 3, 3, 3}, {2, 2, 0, 0}, {2, 4, 2, 0}, {2, 3, 3, 4}, {3, 2, 3, 4}};

bool four_cycle_winnable(const std::vector<int>& hs) {
    for (int refl = 0; refl < 2; ++refl) {
        for (int rot = 0; rot < 4; ++rot) {
            std::vector<int> s(4);
            for (int i = 0; i < 4; ++i) {
                const int j = refl ? (rot - i + 8) % 4 : (rot + i) % 4;
                s[i] = hs[j];
            }
            for (const std::vector<int>& pat : kFourCycleMaximal) {
                bool fits = true;
                for (int i = 0; i < 4; ++i)
                    fits = fits && (pat[i] == 0 || s[i] <= pat[i]);
                if (fits) return true;
            }
        }
    }
    return false;
}

}  // namespace

Outcome classify_latvian_cycle(const Game& game) {
    game.validate();
    std::vector<int> order;
    if (!game.is_latvian() || !is_undirected_cycle(game.d, &order))
        throw std::invalid_argument(
            "classify_latvian_cycle: not a Latvian undirected cycle");
    const int k = game.n();
    if (k == 3) return classify_clique(game);

    std::vector<int> hs;
    for (int v : order) hs.push_back(game.h[v]);
    if (k == 4) {
        if (!four_cycle_winnable(hs))
            return Outcome::unwinnable("four-cycle-maximal-list");
        Outcome o;
        o.verdict = Verdict::Winnable;
        o.trace.push_back({"four-cycle-maximal-list", {}, ""});
        return o;
    }

    std::vector<int> big;
    for (int v = 0; v < k; ++v)
        if (game.h[v] >= 5) big.push_back(v);
    if (!big.empty()) {
        Game path = drop_vertices(game, big);
        Outcome sub = path.n() == 0 ? Outcome::unwinnable("cycle-exhausted")
                                    : classify_latvian_tree(path);
        TraceStep del{"cycle-big-hatness", {}, ""};
        for (int v : big) del.vertices.push_back(game.d.name(v));
        sub.trace.insert(sub.trace.begin(), std::move(del));
        if (sub.verdict == Verdict::Winnable && sub.certificate)
            sub.certificate =
                lift_strategy(path, *sub.certificate, game, ExtendWitness{});
        return sub;
    }

    int twos = 0;
    for (int h : hs) twos += h == 2;
    bool all3 = std::all_of(hs.begin(), hs.end(), [](int h) { return h <= 3; });
    bool pattern = false;
    for (int i = 0; i < k; ++i) {
        auto at = [&](int j) { return hs[((i + j) % k + k) % k]; };
        pattern = pattern ||
                  (at(0) == 3 && at(1) == 2 && at(2) == 3) ||
                  (at(0) == 2 && at(1) == 3 && at(2) == 3) ||
                  (at(0) == 3 && at(1) == 3 && at(2) == 2);
    }
    const bool win = (all3 && k % 3 == 0) || twos >= 2 || pattern;
    if (!win) return Outcome::unwinnable("long-cycle-categorization");
    Outcome o;
    o.verdict = Verdict::Winnable;
    o.trace.push_back({"long-cycle-categorization", {}, ""});
    return o;
}

Outcome classify_auto(const Game& game) {
    game.validate();
    if (game.n() == 0) return Outcome::unwinnable("empty-game");

    ReductionTrace tr = reduce_game(game);
    bool rewrote = false;
    for (const TraceStep& s : tr.steps) rewrote = rewrote || s.rule == "leaf-collapse";
    if (tr.decided) {
        Outcome o;
        o.verdict = *tr.decided;
        o.trace = std::move(tr.steps);
        return o;
    }
    if (tr.residual.n() == 0) {
        Outcome o = Outcome::unwinnable("reduction-exhausted");
        o.trace.insert(o.trace.begin(), tr.steps.begin(), tr.steps.end());
        return o;
    }

    Outcome combined;
    combined.trace = tr.steps;
    bool all_unwinnable = true;
    for (const std::vector<int>& comp : strong_components(tr.residual.d)) {
        Game cg = restrict_game(tr.residual, comp);
        Outcome sub;
        if (cg.n() == 1) {
            sub = Outcome::unwinnable("single-vertex");
        } else if (is_complete(cg.d)) {
            sub = classify_clique(cg);
        } else if (is_directed_cycle(cg.d)) {
            sub = classify_directed_cycle(cg);
        } else if (cg.is_latvian() && is_forest(cg.d)) {
            sub = classify_latvian_tree(cg);
        } else if (cg.is_latvian() && is_undirected_cycle(cg.d)) {
            sub = classify_latvian_cycle(cg);
        } else {
            sub = Outcome::unknown("unrecognized-component");
        }
        for (TraceStep s : sub.trace) {
            if (s.vertices.empty())
                for (int v : comp) s.vertices.push_back(tr.residual.d.name(v));
            combined.trace.push_back(std::move(s));
        }
        if (sub.verdict == Verdict::Winnable) {
            combined.verdict = Verdict::Winnable;
            if (!rewrote && sub.certificate)
                combined.certificate =
                    lift_strategy(cg, *sub.certificate, game, ExtendWitness{});
            return combined;
        }
        all_unwinnable = all_unwinnable && sub.verdict == Verdict::Unwinnable;
    }
    combined.verdict = all_unwinnable ? Verdict::Unwinnable : Verdict::Unknown;
    return combined;
}

}  // namespace hg
