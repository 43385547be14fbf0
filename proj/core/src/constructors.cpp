#include "hatgames/constructors.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "hatgames/classifiers.hpp"
#include "hatgames/oracle.hpp"
#include "hatgames/prisms.hpp"

namespace hg {

namespace {

constexpr std::uint64_t kVerifyBudget = 4'000'000;

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void check_wins(const Game& game, const Strategy& f, const std::string& op) {
    game.validate();
    validate_strategy(game, f);
    if (coloring_count(game) > kVerifyBudget) return;
    VerifyResult r = verify_strategy(game, f);
    require(r.wins, op + ": operand strategy loses");
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_subset(const Game& game, const std::vector<int>& s,
                  const std::string& op) {
    for (int v : s)
        require(v >= 0 && v < game.n(), op + ": vertex index out of range");
}

// Sorted, deduplicated guesses padded with the lowest unused colors up to
// g(v); throws if the raw guesses already exceed the quota.
std::vector<int> finish_guesses(const Game& game, int v, std::vector<int> gs) {
    gs = sorted_unique(gs);
    if (static_cast<int>(gs.size()) > game.g[v])
        throw std::logic_error("constructed guess set exceeds guessness of " +
                               game.d.name(v));
    std::vector<int> out = gs;
    for (int c = 0; static_cast<int>(out.size()) < game.g[v]; ++c)
        if (!std::binary_search(gs.begin(), gs.end(), c)) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

Plan plan_from_fn(const Game& game, int v,
                  const std::function<std::vector<int>(const Coloring&)>& fn) {
    Plan p;
    p.vertex = v;
    p.order = game.d.out(v);
    Coloring c(game.n(), 0);
    for (ColoringIter it(game, p.order); it.valid(); it.advance()) {
        for (std::size_t i = 0; i < p.order.size(); ++i)
            c[p.order[i]] = it.tuple()[i];
        p.table.push_back(finish_guesses(game, v, fn(c)));
    }
    return p;
}

std::vector<int> run_plan(const Game& src, const Plan& p,
                          const std::function<int(int)>& color) {
    long long idx = 0;
    for (int u : p.order) idx = idx * src.h[u] + color(u);
    return p.table[idx];
}

Game rename_vertex(const Game& game, int v, const std::string& nm) {
    Digraph d;
    for (int i = 0; i < game.n(); ++i)
        d.add_vertex(i == v ? nm : game.d.name(i));
    for (auto [u, w] : game.d.arcs()) d.add_arc(u, w);
    return make_game(std::move(d), game.h, game.g);
}

struct PairProduct {
    Construction built;
    std::vector<int> mids;
};

// Shared vertex/arc layout of a binary product: V1\H1, H1xH2 row-major,
// V2\H2. `strong` picks the strong rule for middle-middle arcs, otherwise
// the Cartesian rule.
struct ProductLayout {
    std::vector<int> l1, l2, pos1, pos2, ha, hb;
    int mid_base = 0;

    int mid(int p1, int p2) const {
        return mid_base + p1 * static_cast<int>(hb.size()) + p2;
    }
};

ProductLayout build_product_digraph(const Game& a, const std::vector<int>& ha,
                                    const Game& b, const std::vector<int>& hb,
                                    bool strong, Digraph& d) {
    ProductLayout lo;
    lo.ha = ha;
    lo.hb = hb;
    lo.l1.assign(a.n(), -1);
    lo.l2.assign(b.n(), -1);
    lo.pos1.assign(a.n(), -1);
    lo.pos2.assign(b.n(), -1);
    for (std::size_t i = 0; i < ha.size(); ++i) lo.pos1[ha[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < hb.size(); ++i) lo.pos2[hb[i]] = static_cast<int>(i);
    for (int v = 0; v < a.n(); ++v)
        if (lo.pos1[v] < 0) lo.l1[v] = d.add_vertex(a.d.name(v));
    lo.mid_base = d.n();
    for (int u1 : ha)
        for (int u2 : hb) d.add_vertex(a.d.name(u1) + "*" + b.d.name(u2));
    for (int v = 0; v < b.n(); ++v)
        if (lo.pos2[v] < 0) lo.l2[v] = d.add_vertex(b.d.name(v));

    const int k1 = static_cast<int>(ha.size()), k2 = static_cast<int>(hb.size());
    for (int v = 0; v < a.n(); ++v) {
        if (lo.pos1[v] >= 0) continue;
        for (int u : a.d.out(v)) {
            if (lo.pos1[u] < 0) {
                d.add_arc(lo.l1[v], lo.l1[u]);
            } else {
                for (int p2 = 0; p2 < k2; ++p2)
                    d.add_arc(lo.l1[v], lo.mid(lo.pos1[u], p2));
            }
        }
    }
    for (int v = 0; v < b.n(); ++v) {
        if (lo.pos2[v] >= 0) continue;
        for (int u : b.d.out(v)) {
            if (lo.pos2[u] < 0) {
                d.add_arc(lo.l2[v], lo.l2[u]);
            } else {
                for (int p1 = 0; p1 < k1; ++p1)
                    d.add_arc(lo.l2[v], lo.mid(p1, lo.pos2[u]));
            }
        }
    }
    for (int p1 = 0; p1 < k1; ++p1) {
        for (int p2 = 0; p2 < k2; ++p2) {
            const int u1 = ha[p1], u2 = hb[p2], m = lo.mid(p1, p2);
            for (int w : a.d.out(u1))
                if (lo.pos1[w] < 0) d.add_arc(m, lo.l1[w]);
            for (int w : b.d.out(u2))
                if (lo.pos2[w] < 0) d.add_arc(m, lo.l2[w]);
            for (int q1 = 0; q1 < k1; ++q1) {
                for (int q2 = 0; q2 < k2; ++q2) {
                    if (q1 == p1 && q2 == p2) continue;
                    const bool e1 = a.d.has_arc(u1, ha[q1]), q1eq = q1 == p1;
                    const bool e2 = b.d.has_arc(u2, hb[q2]), q2eq = q2 == p2;
                    const bool link = strong ? (e1 || q1eq) && (e2 || q2eq)
                                             : (e1 && q2eq) || (q1eq && e2);
                    if (link) d.add_arc(m, lo.mid(q1, q2));
                }
            }
        }
    }
    return lo;
}

int mod_down(long long x, int m) { return static_cast<int>(((x % m) + m) % m); }

PairProduct clique_product_binary(const Game& a, const Strategy& fa,
                                  const std::vector<int>& ha_in, const Game& b,
                                  const Strategy& fb,
                                  const std::vector<int>& hb_in) {
    const std::vector<int> ha = sorted_unique(ha_in), hb = sorted_unique(hb_in);
    check_subset(a, ha, "clique_product");
    check_subset(b, hb, "clique_product");
    require(!ha.empty() && !hb.empty(), "clique_product: empty gluing set");
    require(is_clique_subset(a.d, ha) && is_clique_subset(b.d, hb),
            "clique_product: gluing set is not a clique");

    Digraph d;
    ProductLayout lo = build_product_digraph(a, ha, b, hb, true, d);
    const int k1 = static_cast<int>(ha.size()), k2 = static_cast<int>(hb.size());
    std::vector<int> h(d.n()), g(d.n());
    for (int v = 0; v < a.n(); ++v)
        if (lo.l1[v] >= 0) h[lo.l1[v]] = a.h[v], g[lo.l1[v]] = a.g[v];
    for (int v = 0; v < b.n(); ++v)
        if (lo.l2[v] >= 0) h[lo.l2[v]] = b.h[v], g[lo.l2[v]] = b.g[v];
    for (int p1 = 0; p1 < k1; ++p1)
        for (int p2 = 0; p2 < k2; ++p2) {
            h[lo.mid(p1, p2)] = a.h[ha[p1]] * b.h[hb[p2]];
            g[lo.mid(p1, p2)] = a.g[ha[p1]] * b.g[hb[p2]];
        }
    Game ng = make_game(std::move(d), std::move(h), std::move(g));

    auto left = [&](const Coloring& c, int p1, int p2) {
        return c[lo.mid(p1, p2)] / b.h[hb[p2]];
    };
    auto right = [&](const Coloring& c, int p1, int p2) {
        return c[lo.mid(p1, p2)] % b.h[hb[p2]];
    };
    auto s_left = [&](const Coloring& c, int u1) {
        long long s = 0;
        for (int p2 = 0; p2 < k2; ++p2) s += left(c, lo.pos1[u1], p2);
        return static_cast<int>(s % a.h[u1]);
    };
    auto s_right = [&](const Coloring& c, int u2) {
        long long s = 0;
        for (int p1 = 0; p1 < k1; ++p1) s += right(c, p1, lo.pos2[u2]);
        return static_cast<int>(s % b.h[u2]);
    };

    Strategy f;
    f.plans.resize(ng.n());
    for (int v = 0; v < a.n(); ++v) {
        if (lo.l1[v] < 0) continue;
        f.plans[lo.l1[v]] = plan_from_fn(ng, lo.l1[v], [&](const Coloring& c) {
            return run_plan(a, fa.plans[v], [&](int w) {
                return lo.pos1[w] >= 0 ? s_left(c, w) : c[lo.l1[w]];
            });
        });
    }
    for (int v = 0; v < b.n(); ++v) {
        if (lo.l2[v] < 0) continue;
        f.plans[lo.l2[v]] = plan_from_fn(ng, lo.l2[v], [&](const Coloring& c) {
            return run_plan(b, fb.plans[v], [&](int w) {
                return lo.pos2[w] >= 0 ? s_right(c, w) : c[lo.l2[w]];
            });
        });
    }
    for (int p1 = 0; p1 < k1; ++p1) {
        for (int p2 = 0; p2 < k2; ++p2) {
            const int u1 = ha[p1], u2 = hb[p2], m = lo.mid(p1, p2);
            f.plans[m] = plan_from_fn(ng, m, [&](const Coloring& c) {
                std::vector<int> g1 = run_plan(a, fa.plans[u1], [&](int w) {
                    return lo.pos1[w] >= 0 ? s_left(c, w) : c[lo.l1[w]];
                });
                std::vector<int> g2 = run_plan(b, fb.plans[u2], [&](int w) {
                    return lo.pos2[w] >= 0 ? s_right(c, w) : c[lo.l2[w]];
                });
                long long row = 0, col = 0;
                for (int q2 = 0; q2 < k2; ++q2)
                    if (q2 != p2) row += left(c, p1, q2);
                for (int q1 = 0; q1 < k1; ++q1)
                    if (q1 != p1) col += right(c, q1, p2);
                std::vector<int> out;
                for (int x : g1)
                    for (int y : g2)
                        out.push_back(mod_down(x - row, a.h[u1]) * b.h[u2] +
                                      mod_down(y - col, b.h[u2]));
                return out;
            });
        }
    }

    PairProduct pp{{std::move(ng), std::move(f)}, {}};
    for (int i = 0; i < k1 * k2; ++i) pp.mids.push_back(lo.mid_base + i);
    return pp;
}

// Fresh name not used by the game: base, then base', base'', ...
std::string fresh_name(const Game& game, std::string base) {
    while (game.d.index_of(base) >= 0) base += "'";
    return base;
}

}  // namespace

Construction clique_product(const std::vector<Construction>& operands,
                            const std::vector<std::vector<int>>& cliques) {
    require(!operands.empty(), "clique_product: no operands");
    require(operands.size() == cliques.size(),
            "clique_product: operand/clique count mismatch");
    for (std::size_t i = 0; i < operands.size(); ++i) {
        check_subset(operands[i].game, cliques[i], "clique_product");
        require(!cliques[i].empty(), "clique_product: empty gluing set");
        require(is_clique_subset(operands[i].game.d, sorted_unique(cliques[i])),
                "clique_product: gluing set is not a clique");
        check_wins(operands[i].game, operands[i].strategy, "clique_product");
    }
    Construction cur = operands[0];
    std::vector<int> cur_h = sorted_unique(cliques[0]);
    for (std::size_t i = 1; i < operands.size(); ++i) {
        PairProduct pp =
            clique_product_binary(cur.game, cur.strategy, cur_h,
                                  operands[i].game, operands[i].strategy,
                                  sorted_unique(cliques[i]));
        cur = std::move(pp.built);
        cur_h = std::move(pp.mids);
    }
    return cur;
}

Construction product_single_point(const Game& g1, const Strategy& f1,
                                  const Game& g2, const Strategy& f2,
                                  const std::string& shared) {
    require(g1.is_latvian() && g2.is_latvian(),
            "product_single_point: operands must be Latvian");
    require(g1.n() >= 2 && g2.n() >= 2,
            "product_single_point: single-vertex operand cannot win");
    const int a1 = g1.d.index_of(shared), a2 = g2.d.index_of(shared);
    require(a1 >= 0 && a2 >= 0,
            "product_single_point: shared vertex missing from an operand");
    for (const std::string& nm : g1.d.names())
        require(nm == shared || g2.d.index_of(nm) < 0,
                "product_single_point: operands overlap beyond " + shared);
    check_wins(g1, f1, "product_single_point");
    check_wins(g2, f2, "product_single_point");
    PairProduct pp = clique_product_binary(g1, f1, {a1}, g2, f2, {a2});
    Game renamed = rename_vertex(pp.built.game, pp.mids[0], shared);
    return Construction{std::move(renamed), std::move(pp.built.strategy)};
}

Construction attach_vertex_general(const Game& game, const Strategy& f,
                                   const std::vector<int>& ys_in,
                                   const std::vector<int>& q_in,
                                   const std::vector<int>& k_in, int hx, int gx,
                                   const std::string& xname) {
    require(hx >= 2 && gx >= 1 && gx < hx,
            "attach_vertex_general: need h(x) > g(x) > 0, h(x) >= 2");
    require(ys_in.size() == q_in.size() && ys_in.size() == k_in.size(),
            "attach_vertex_general: ys/q/k size mismatch");
    check_subset(game, ys_in, "attach_vertex_general");
    require(game.d.index_of(xname) < 0,
            "attach_vertex_general: name already used: " + xname);

    // Sort ys ascending carrying q, k along; plan orders assume it.
    std::vector<std::size_t> perm(ys_in.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t i, std::size_t j) { return ys_in[i] < ys_in[j]; });
    std::vector<int> ys, q, k;
    for (std::size_t i : perm) {
        require(ys.empty() || ys.back() != ys_in[i],
                "attach_vertex_general: duplicate vertex in ys");
        ys.push_back(ys_in[i]);
        q.push_back(q_in[i]);
        k.push_back(k_in[i]);
    }
    const int m = static_cast<int>(ys.size());
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    for (int i = 0; i < m; ++i) {
        require(q[i] >= 0 && k[i] >= 0, "attach_vertex_general: negative q/k");
        const int c = ceil_div(k[i], hx - 1);
        const int need1 = (hx - gx) * c, need2 = (hx - gx - 1) * c;
        require(game.g[ys[i]] + q[i] >= need1,
                "attach_vertex_general: guess inequality fails at " +
                    game.d.name(ys[i]) + " (slack " +
                    std::to_string(game.g[ys[i]] + q[i] - need1) + ")");
        require(q[i] >= need2,
                "attach_vertex_general: surplus inequality fails at " +
                    game.d.name(ys[i]) + " (slack " +
                    std::to_string(q[i] - need2) + ")");
        require(game.g[ys[i]] + q[i] < game.h[ys[i]] + k[i],
                "attach_vertex_general: parameters collapse at " +
                    game.d.name(ys[i]));
    }
    check_wins(game, f, "attach_vertex_general");

    Digraph d;
    for (int v = 0; v < game.n(); ++v) d.add_vertex(game.d.name(v));
    const int x = d.add_vertex(xname);
    for (auto [u, w] : game.d.arcs()) d.add_arc(u, w);
    for (int y : ys) d.add_edge(x, y);
    std::vector<int> h = game.h, g = game.g;
    for (int i = 0; i < m; ++i) {
        h[ys[i]] += k[i];
        g[ys[i]] += q[i];
    }
    h.push_back(hx);
    g.push_back(gx);
    Game ng = make_game(std::move(d), std::move(h), std::move(g));

    // Nested boxes U_0 c U_1 c ... partition the enlarged box into parts
    // P_level; the hint parts A_n are cyclic unions of gx consecutive parts.
    auto level_of = [&](int axis, int color) {
        for (int n = 0;; ++n)
            if (color < game.h[ys[axis]] +
                            static_cast<int>((static_cast<long long>(n) *
                                              k[axis]) /
                                             (hx - 1)))
                return n;
    };
    auto in_part = [&](int n, int lvl) { return mod_down(lvl - n, hx) < gx; };
    auto point_level = [&](const Coloring& c) {
        int lvl = 0;
        for (int i = 0; i < m; ++i) lvl = std::max(lvl, level_of(i, c[ys[i]]));
        return lvl;
    };

    Strategy nf;
    nf.plans.resize(ng.n());
    nf.plans[x] = plan_from_fn(ng, x, [&](const Coloring& c) {
        const int lvl = point_level(c);
        std::vector<int> out;
        for (int n = 0; n < hx; ++n)
            if (in_part(n, lvl)) out.push_back(n);
        return out;
    });
    auto clamped = [&](const Coloring& c) {
        return [&](int w) { return std::min(c[w], game.h[w] - 1); };
    };
    for (int i = 0; i < m; ++i) {
        const int v = ys[i];
        nf.plans[v] = plan_from_fn(ng, v, [&, i, v](const Coloring& c) {
            const int n = c[x];
            std::vector<int> out;
            if (in_part(n, 0)) {
                for (int dcol = 0; dcol < ng.h[v]; ++dcol)
                    if (!in_part(n, level_of(i, dcol))) out.push_back(dcol);
            } else {
                out = run_plan(game, f.plans[v], clamped(c));
                for (int dcol = game.h[v]; dcol < ng.h[v]; ++dcol)
                    if (!in_part(n, level_of(i, dcol))) out.push_back(dcol);
            }
            return out;
        });
    }
    for (int v = 0; v < game.n(); ++v) {
        if (std::binary_search(ys.begin(), ys.end(), v)) continue;
        nf.plans[v] = plan_from_fn(ng, v, [&, v](const Coloring& c) {
            return run_plan(game, f.plans[v], clamped(c));
        });
    }
    return Construction{std::move(ng), std::move(nf)};
}

Construction attach_vertex_clique(const Game& game, const Strategy& f,
                                  const std::vector<int>& ys_in, int hx, int gx,
                                  const std::string& xname) {
    const std::vector<int> ys = sorted_unique(ys_in);
    check_subset(game, ys, "attach_vertex_clique");
    require(!ys.empty(), "attach_vertex_clique: empty attachment set");
    require(is_clique_subset(game.d, ys),
            "attach_vertex_clique: attachment set is not a clique");
    require(hx >= 2 && gx >= 1 && gx < hx,
            "attach_vertex_clique: need h(x) > g(x) > 0, h(x) >= 2");
    require(game.d.index_of(xname) < 0,
            "attach_vertex_clique: name already used: " + xname);
    check_wins(game, f, "attach_vertex_clique");

    // Two-vertex clique game on {x, z}: ratios gx/hx + (hx-gx)/hx = 1.
    Digraph pd;
    const std::string zname = fresh_name(game, xname + "_z");
    pd.add_vertex(xname);
    pd.add_vertex(zname);
    pd.add_edge(0, 1);
    Game pg = make_game(std::move(pd), {hx, hx}, {gx, hx - gx});
    Outcome po = classify_clique(pg);
    if (po.verdict != Verdict::Winnable || !po.certificate)
        throw std::logic_error("attach_vertex_clique: pair game not winnable");

    PairProduct pp =
        clique_product_binary(game, f, ys, pg, *po.certificate, {1});
    Game out = pp.built.game;
    for (std::size_t i = 0; i < ys.size(); ++i)
        out = rename_vertex(out, pp.mids[i], game.d.name(ys[i]));
    return Construction{std::move(out), std::move(pp.built.strategy)};
}

Construction attach_hatness3(const Game& game, const Strategy& f,
                             const std::vector<int>& ys_in, int b,
                             const std::string& xname) {
    const std::vector<int> ys = sorted_unique(ys_in);
    check_subset(game, ys, "attach_hatness3");
    require(std::binary_search(ys.begin(), ys.end(), b),
            "attach_hatness3: b must belong to the attachment set");
    require(game.h[b] == 2, "attach_hatness3: b must have hatness 2");
    require(game.d.index_of(xname) < 0,
            "attach_hatness3: name already used: " + xname);
    check_wins(game, f, "attach_hatness3");

    Digraph d;
    for (int v = 0; v < game.n(); ++v) d.add_vertex(game.d.name(v));
    const int x = d.add_vertex(xname);
    for (auto [u, w] : game.d.arcs()) d.add_arc(u, w);
    for (int y : ys) d.add_edge(x, y);
    std::vector<int> h = game.h, g = game.g;
    for (int y : ys)
        if (y != b) h[y] += game.g[y];
    h.push_back(3);
    g.push_back(1);
    Game ng = make_game(std::move(d), std::move(h), std::move(g));

    auto clamped = [&](const Coloring& c) {
        return [&](int w) { return std::min(c[w], game.h[w] - 1); };
    };
    Strategy nf;
    nf.plans.resize(ng.n());
    nf.plans[x] = plan_from_fn(ng, x, [&](const Coloring& c) {
        for (int y : ys)
            if (y != b && c[y] >= game.h[y]) return std::vector<int>{2};
        return std::vector<int>{1 - c[b]};
    });
    for (int v = 0; v < game.n(); ++v) {
        const bool in_ys = std::binary_search(ys.begin(), ys.end(), v);
        nf.plans[v] = plan_from_fn(ng, v, [&, v, in_ys](const Coloring& c) {
            if (!in_ys || c[x] == 2) return run_plan(game, f.plans[v], clamped(c));
            if (v == b) return std::vector<int>{c[x]};
            std::vector<int> out;
            for (int dcol = game.h[v]; dcol < ng.h[v]; ++dcol) out.push_back(dcol);
            return out;
        });
    }
    return Construction{std::move(ng), std::move(nf)};
}

namespace {

enum class PathKind { Weak1, Weak2, Strong1, Strong2 };

// Weak patterns: (2,3,4,..,4) and (3,2,4,..,4). Strong patterns surround
// (3,2,3) or (2,3,3) with at least one 4 on each side.
PathKind classify_pattern(const std::vector<int>& p, int& pivot) {
    const int n = static_cast<int>(p.size());
    require(n >= 2, "attach_path: pattern too short");
    auto all4 = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            if (p[i] != 4) return false;
        return true;
    };
    if (p[0] == 2 && p[1] == 3 && all4(2, n)) return PathKind::Weak1;
    if (p[0] == 3 && p[1] == 2 && all4(2, n)) return PathKind::Weak2;
    for (int i = 1; i + 2 < n; ++i) {
        if (i >= 1 && i + 3 <= n - 1 && p[i] == 3 && p[i + 1] == 2 &&
            p[i + 2] == 3 && all4(0, i) && all4(i + 3, n)) {
            pivot = i + 1;
            return PathKind::Strong1;
        }
        if (i >= 1 && i + 3 <= n - 1 && p[i] == 2 && p[i + 1] == 3 &&
            p[i + 2] == 3 && all4(0, i) && all4(i + 3, n)) {
            pivot = i;
            return PathKind::Strong2;
        }
    }
    throw std::invalid_argument("attach_path: unsupported hatness pattern");
}

std::vector<int> by_names(const Game& game, const std::vector<std::string>& nms) {
    std::vector<int> out;
    for (const std::string& nm : nms) {
        const int v = game.d.index_of(nm);
        if (v < 0) throw std::logic_error("attach_path: lost vertex " + nm);
        out.push_back(v);
    }
    return out;
}

// Attach a hatness-2 vertex to `ys`, doubling clique targets and adding
// guessness otherwise.
Construction attach_h2(const Construction& cur, const std::vector<int>& ys,
                       bool clique, const std::string& nm) {
    if (!ys.empty() && clique)
        return attach_vertex_clique(cur.game, cur.strategy, ys, 2, 1, nm);
    std::vector<int> q(ys.size(), 0), k;
    for (int y : ys) k.push_back(cur.game.g[y]);
    return attach_vertex_general(cur.game, cur.strategy, ys, q, k, 2, 1, nm);
}

}  // namespace

Construction attach_path(const Game& game, const Strategy& f,
                         const PathAttachment& spec) {
    int pivot = -1;
    const PathKind kind = classify_pattern(spec.pattern, pivot);
    const int n = static_cast<int>(spec.pattern.size());
    check_subset(game, spec.x, "attach_path");
    check_subset(game, spec.z, "attach_path");
    check_wins(game, f, "attach_path");

    std::vector<std::string> pname(n);
    for (int i = 0; i < n; ++i) {
        pname[i] = spec.name_prefix + std::to_string(i + 1);
        require(game.d.index_of(pname[i]) < 0,
                "attach_path: name already used: " + pname[i]);
    }
    std::vector<std::string> xn, zn;
    for (int v : sorted_unique(spec.x)) xn.push_back(game.d.name(v));
    for (int v : sorted_unique(spec.z)) zn.push_back(game.d.name(v));

    Construction cur{game, f};
    if (kind == PathKind::Weak1 || kind == PathKind::Weak2) {
        if (n == 2) {
            cur = attach_h2(cur, by_names(cur.game, zn), spec.z_clique, pname[1]);
        } else {
            cur = attach_h2(cur, by_names(cur.game, zn), spec.z_clique,
                            pname[n - 1]);
            for (int i = n - 2; i >= 1; --i)
                cur = attach_h2(cur, by_names(cur.game, {pname[i + 1]}), true,
                                pname[i]);
        }
        std::vector<std::string> tail = xn;
        tail.push_back(pname[1]);
        if (kind == PathKind::Weak1) {
            cur = attach_h2(cur, by_names(cur.game, tail), false, pname[0]);
        } else {
            const int b = cur.game.d.index_of(pname[1]);
            cur = attach_hatness3(cur.game, cur.strategy,
                                  by_names(cur.game, tail), b, pname[0]);
        }
        return cur;
    }

    require(game.is_latvian(), "attach_path: strong patterns need a Latvian game");
    // Build both arms inward, then close with the pivot vertex.
    cur = attach_h2(cur, by_names(cur.game, xn), spec.x_clique, pname[0]);
    cur = attach_h2(cur, by_names(cur.game, zn), spec.z_clique, pname[n - 1]);
    if (kind == PathKind::Strong1) {
        for (int i = 1; i <= pivot - 1; ++i)
            cur = attach_h2(cur, by_names(cur.game, {pname[i - 1]}), true,
                            pname[i]);
        for (int i = n - 2; i >= pivot + 1; --i)
            cur = attach_h2(cur, by_names(cur.game, {pname[i + 1]}), true,
                            pname[i]);
        std::vector<int> ys =
            by_names(cur.game, {pname[pivot - 1], pname[pivot + 1]});
        std::vector<int> q(2, 0), k = {cur.game.g[ys[0]], cur.game.g[ys[1]]};
        return attach_vertex_general(cur.game, cur.strategy, ys, q, k, 2, 1,
                                     pname[pivot]);
    }
    // Strong2: pattern (4.., 2, 3, 3, 4..) with the 2 at `pivot`.
    for (int i = 1; i <= pivot; ++i)
        cur = attach_h2(cur, by_names(cur.game, {pname[i - 1]}), true, pname[i]);
    for (int i = n - 2; i >= pivot + 2; --i)
        cur = attach_h2(cur, by_names(cur.game, {pname[i + 1]}), true, pname[i]);
    const int b = cur.game.d.index_of(pname[pivot]);
    std::vector<int> ys = by_names(cur.game, {pname[pivot], pname[pivot + 2]});
    return attach_hatness3(cur.game, cur.strategy, ys, b, pname[pivot + 1]);
}

Construction clique_general_product(const Game& g1, const Strategy& f1,
                                    const std::vector<int>& h1_in,
                                    const Game& g2, const Strategy& f2,
                                    const std::vector<int>& h2_in) {
    const std::vector<int> ha = sorted_unique(h1_in), hb = sorted_unique(h2_in);
    check_subset(g1, ha, "clique_general_product");
    check_subset(g2, hb, "clique_general_product");
    require(!ha.empty() && !hb.empty(), "clique_general_product: empty side");
    require(is_clique_subset(g1.d, ha),
            "clique_general_product: left side is not a clique");
    require(is_independent_subset(g2.d, hb),
            "clique_general_product: right side must be independent "
            "(arcs inside it defeat the imaginary-color bookkeeping)");
    check_wins(g1, f1, "clique_general_product");
    check_wins(g2, f2, "clique_general_product");

    const int k1 = static_cast<int>(ha.size()), k2 = static_cast<int>(hb.size());
    Digraph d;
    ProductLayout lo = build_product_digraph(g1, ha, g2, hb, false, d);
    std::vector<int> h(d.n()), g(d.n());
    for (int v = 0; v < g1.n(); ++v) {
        if (lo.l1[v] < 0) continue;
        bool sees = false;
        for (int u : g1.d.out(v)) sees = sees || lo.pos1[u] >= 0;
        h[lo.l1[v]] = g1.h[v];
        g[lo.l1[v]] = sees ? k2 * g1.g[v] : g1.g[v];
        require(g[lo.l1[v]] < h[lo.l1[v]],
                "clique_general_product: inflated guessness reaches hatness at " +
                    g1.d.name(v));
    }
    for (int v = 0; v < g2.n(); ++v)
        if (lo.l2[v] >= 0) h[lo.l2[v]] = g2.h[v], g[lo.l2[v]] = g2.g[v];
    for (int p1 = 0; p1 < k1; ++p1)
        for (int p2 = 0; p2 < k2; ++p2) {
            h[lo.mid(p1, p2)] = g1.h[ha[p1]] * g2.h[hb[p2]];
            g[lo.mid(p1, p2)] = g1.g[ha[p1]] * g2.g[hb[p2]];
        }
    Game ng = make_game(std::move(d), std::move(h), std::move(g));

    auto left = [&](const Coloring& c, int p1, int p2) {
        return c[lo.mid(p1, p2)] / g2.h[hb[p2]];
    };
    auto right = [&](const Coloring& c, int p1, int p2) {
        return c[lo.mid(p1, p2)] % g2.h[hb[p2]];
    };
    auto s_right = [&](const Coloring& c, int u2) {
        long long s = 0;
        for (int p1 = 0; p1 < k1; ++p1) s += right(c, p1, lo.pos2[u2]);
        return static_cast<int>(s % g2.h[u2]);
    };

    Strategy f;
    f.plans.resize(ng.n());
    for (int v = 0; v < g1.n(); ++v) {
        if (lo.l1[v] < 0) continue;
        f.plans[lo.l1[v]] = plan_from_fn(ng, lo.l1[v], [&](const Coloring& c) {
            std::vector<int> out;
            for (int p2 = 0; p2 < k2; ++p2) {
                std::vector<int> row = run_plan(g1, f1.plans[v], [&](int w) {
                    return lo.pos1[w] >= 0 ? left(c, lo.pos1[w], p2)
                                           : c[lo.l1[w]];
                });
                out.insert(out.end(), row.begin(), row.end());
            }
            return out;
        });
    }
    for (int v = 0; v < g2.n(); ++v) {
        if (lo.l2[v] < 0) continue;
        f.plans[lo.l2[v]] = plan_from_fn(ng, lo.l2[v], [&](const Coloring& c) {
            return run_plan(g2, f2.plans[v], [&](int w) {
                return lo.pos2[w] >= 0 ? s_right(c, w) : c[lo.l2[w]];
            });
        });
    }
    for (int p1 = 0; p1 < k1; ++p1) {
        for (int p2 = 0; p2 < k2; ++p2) {
            const int u1 = ha[p1], u2 = hb[p2], m = lo.mid(p1, p2);
            f.plans[m] = plan_from_fn(ng, m, [&](const Coloring& c) {
                std::vector<int> lg = run_plan(g1, f1.plans[u1], [&](int w) {
                    return lo.pos1[w] >= 0 ? left(c, lo.pos1[w], p2)
                                           : c[lo.l1[w]];
                });
                std::vector<int> rg = run_plan(g2, f2.plans[u2], [&](int w) {
                    // H2 is independent: f2 inputs never land inside H2.
                    return c[lo.l2[w]];
                });
                long long col = 0;
                for (int q1 = 0; q1 < k1; ++q1)
                    if (q1 != p1) col += right(c, q1, p2);
                std::vector<int> out;
                for (int x : lg)
                    for (int y : rg)
                        out.push_back(x * g2.h[u2] + mod_down(y - col, g2.h[u2]));
                return out;
            });
        }
    }
    return Construction{std::move(ng), std::move(f)};
}

Construction general_product(const std::vector<Construction>& operands,
                             const std::vector<std::vector<int>>& parts,
                             const std::vector<int>& surplus) {
    const int nf = static_cast<int>(operands.size());
    require(nf >= 2, "general_product: need at least two operands");
    require(parts.size() == operands.size() && surplus.size() == operands.size(),
            "general_product: operand/part/surplus count mismatch");

    std::vector<std::vector<int>> hs;
    Rat total = 0;
    for (int i = 0; i < nf; ++i) {
        const Game& gi = operands[i].game;
        std::vector<int> hi = sorted_unique(parts[i]);
        check_subset(gi, hi, "general_product");
        require(!hi.empty(), "general_product: empty gluing set");
        require(surplus[i] >= 0, "general_product: negative surplus");
        check_wins(gi, operands[i].strategy, "general_product");
        require(coloring_count(gi) <= kVerifyBudget,
                "general_product: operand too large to check the surplus bound");
        // Exact check: all-outside-wrong colorings leave <= r[i] of H_i wrong.
        std::vector<char> inh(gi.n(), 0);
        for (int v : hi) inh[v] = 1;
        std::vector<int> all(gi.n());
        for (int v = 0; v < gi.n(); ++v) all[v] = v;
        for (ColoringIter it(gi, all); it.valid(); it.advance()) {
            const Coloring& c = it.tuple();
            bool outside_all_wrong = true;
            for (int v = 0; v < gi.n() && outside_all_wrong; ++v)
                if (!inh[v] && guesses_right(gi, operands[i].strategy, v, c))
                    outside_all_wrong = false;
            if (!outside_all_wrong) continue;
            int wrong = 0;
            for (int v : hi)
                if (!guesses_right(gi, operands[i].strategy, v, c)) ++wrong;
            require(wrong <= surplus[i],
                    "general_product: surplus bound fails on operand " +
                        std::to_string(i) + " (" + std::to_string(wrong) +
                        " wrong)");
        }
        total += Rat(surplus[i], static_cast<int>(hi.size()));
        hs.push_back(std::move(hi));
    }
    require(total < 1, "general_product: surplus ratios sum to at least 1");

    // Layout: each V_i \ H_i in operand order, then prod H_i row-major.
    Digraph d;
    std::vector<std::vector<int>> side(nf), pos(nf);
    for (int i = 0; i < nf; ++i) {
        const Game& gi = operands[i].game;
        side[i].assign(gi.n(), -1);
        pos[i].assign(gi.n(), -1);
        for (std::size_t p = 0; p < hs[i].size(); ++p)
            pos[i][hs[i][p]] = static_cast<int>(p);
        for (int v = 0; v < gi.n(); ++v)
            if (pos[i][v] < 0) side[i][v] = d.add_vertex(gi.d.name(v));
    }
    const int mid_base = d.n();
    std::vector<int> sizes(nf), stride(nf);
    long long mids = 1;
    for (int i = 0; i < nf; ++i) {
        sizes[i] = static_cast<int>(hs[i].size());
        mids *= sizes[i];
    }
    require(mids <= 1'000'000, "general_product: middle set too large");
    stride[nf - 1] = 1;
    for (int i = nf - 2; i >= 0; --i) stride[i] = stride[i + 1] * sizes[i + 1];
    std::vector<std::vector<int>> coords(mids, std::vector<int>(nf));
    for (long long mcode = 0; mcode < mids; ++mcode) {
        std::string nm;
        for (int i = 0; i < nf; ++i) {
            coords[mcode][i] = static_cast<int>(mcode / stride[i]) % sizes[i];
            if (i) nm += "*";
            nm += operands[i].game.d.name(hs[i][coords[mcode][i]]);
        }
        d.add_vertex(nm);
    }
    auto mid = [&](const std::vector<int>& cs) {
        long long code = 0;
        for (int i = 0; i < nf; ++i) code += static_cast<long long>(cs[i]) * stride[i];
        return mid_base + static_cast<int>(code);
    };

    for (int i = 0; i < nf; ++i) {
        const Game& gi = operands[i].game;
        for (int v = 0; v < gi.n(); ++v) {
            if (pos[i][v] >= 0) continue;
            for (int u : gi.d.out(v)) {
                if (pos[i][u] < 0) {
                    d.add_arc(side[i][v], side[i][u]);
                } else {
                    for (long long mcode = 0; mcode < mids; ++mcode)
                        if (coords[mcode][i] == pos[i][u])
                            d.add_arc(side[i][v], mid_base + static_cast<int>(mcode));
                }
            }
        }
    }
    for (long long mcode = 0; mcode < mids; ++mcode) {
        const int m = mid_base + static_cast<int>(mcode);
        for (int i = 0; i < nf; ++i) {
            const Game& gi = operands[i].game;
            const int ui = hs[i][coords[mcode][i]];
            for (int w : gi.d.out(ui)) {
                if (pos[i][w] < 0) {
                    d.add_arc(m, side[i][w]);
                } else {
                    std::vector<int> cs = coords[mcode];
                    cs[i] = pos[i][w];
                    d.add_arc(m, mid(cs));
                }
            }
        }
    }

    std::vector<int> h(d.n()), g(d.n());
    for (int i = 0; i < nf; ++i) {
        const Game& gi = operands[i].game;
        long long others = 1;
        for (int j = 0; j < nf; ++j)
            if (j != i) others *= sizes[j];
        for (int v = 0; v < gi.n(); ++v) {
            if (pos[i][v] >= 0) continue;
            bool sees = false;
            for (int u : gi.d.out(v)) sees = sees || pos[i][u] >= 0;
            h[side[i][v]] = gi.h[v];
            g[side[i][v]] = sees ? static_cast<int>(others) * gi.g[v] : gi.g[v];
            require(g[side[i][v]] < h[side[i][v]],
                    "general_product: inflated guessness reaches hatness at " +
                        gi.d.name(v));
        }
    }
    for (long long mcode = 0; mcode < mids; ++mcode) {
        long long hh = 1, gg = 1;
        for (int i = 0; i < nf; ++i) {
            hh *= operands[i].game.h[hs[i][coords[mcode][i]]];
            gg *= operands[i].game.g[hs[i][coords[mcode][i]]];
        }
        h[mid_base + mcode] = static_cast<int>(hh);
        g[mid_base + mcode] = static_cast<int>(gg);
    }
    Game ng = make_game(std::move(d), std::move(h), std::move(g));

    // Composite colors of a middle are mixed-radix over its factor hatnesses,
    // first factor most significant.
    auto digit = [&](const Coloring& c, const std::vector<int>& cs, int i) {
        long long val = c[mid(cs)];
        for (int j = nf - 1; j > i; --j)
            val /= operands[j].game.h[hs[j][cs[j]]];
        return static_cast<int>(val % operands[i].game.h[hs[i][cs[i]]]);
    };

    Strategy f;
    f.plans.resize(ng.n());
    for (int i = 0; i < nf; ++i) {
        const Game& gi = operands[i].game;
        const Strategy& fi = operands[i].strategy;
        for (int v = 0; v < gi.n(); ++v) {
            if (pos[i][v] >= 0) continue;
            f.plans[side[i][v]] =
                plan_from_fn(ng, side[i][v], [&, i, v](const Coloring& c) {
                    std::vector<int> out;
                    // One copy of the factor plan per slab of the middles.
                    for (long long mcode = 0; mcode < mids; ++mcode) {
                        if (coords[mcode][i] != 0) continue;
                        std::vector<int> cs = coords[mcode];
                        std::vector<int> row = run_plan(gi, fi.plans[v], [&](int w) {
                            if (pos[i][w] < 0) return c[side[i][w]];
                            cs[i] = pos[i][w];
                            return digit(c, cs, i);
                        });
                        out.insert(out.end(), row.begin(), row.end());
                        if (ng.g[side[i][v]] == gi.g[v]) break;  // no slab vision
                    }
                    return out;
                });
        }
    }
    for (long long mcode = 0; mcode < mids; ++mcode) {
        const int m = mid_base + static_cast<int>(mcode);
        f.plans[m] = plan_from_fn(ng, m, [&, mcode, m](const Coloring& c) {
            std::vector<std::vector<int>> per(nf);
            for (int i = 0; i < nf; ++i) {
                const Game& gi = operands[i].game;
                const int ui = hs[i][coords[mcode][i]];
                per[i] = run_plan(gi, operands[i].strategy.plans[ui], [&](int w) {
                    if (pos[i][w] < 0) return c[side[i][w]];
                    std::vector<int> cs = coords[mcode];
                    cs[i] = pos[i][w];
                    return digit(c, cs, i);
                });
            }
            std::vector<int> out{0};
            for (int i = 0; i < nf; ++i) {
                const int hi = operands[i].game.h[hs[i][coords[mcode][i]]];
                std::vector<int> next;
                for (int base : out)
                    for (int v : per[i]) next.push_back(base * hi + v);
                out = std::move(next);
            }
            return out;
        });
    }
    return Construction{std::move(ng), std::move(f)};
}

Construction replace_vertex_with_arcs(const Game& game, const Strategy& f,
                                      int v) {
    require(v >= 0 && v < game.n(), "replace_vertex_with_arcs: bad vertex");
    const std::vector<int>& outs = game.d.out(v);
    require(outs == game.d.in(v) &&
                std::all_of(outs.begin(), outs.end(),
                            [&](int u) { return game.d.has_arc(u, v); }),
            "replace_vertex_with_arcs: vertex must be directionless");
    require(is_independent_subset(game.d, outs),
            "replace_vertex_with_arcs: neighborhood must be independent");
    Int prod = game.g[v];
    for (int u : outs) prod *= game.g[u] + 1;
    require(Int(game.h[v]) > prod,
            "replace_vertex_with_arcs: ratio bound fails (g(v) * prod of "
            "(g(u)+1) = " + prod.str() + " >= h(v))");
    check_wins(game, f, "replace_vertex_with_arcs");

    std::vector<int> keep;
    std::vector<int> remap(game.n(), -1);
    for (int w = 0; w < game.n(); ++w)
        if (w != v) {
            remap[w] = static_cast<int>(keep.size());
            keep.push_back(w);
        }
    Game del = restrict_game(game, keep);
    Strategy f0;
    f0.plans.resize(del.n());
    std::vector<int> subj;
    for (int u : outs) subj.push_back(remap[u]);
    std::vector<char> in_subj(del.n(), 0);
    for (int s : subj) in_subj[s] = 1;
    for (int w : keep) {
        const int nw = remap[w];
        if (in_subj[nw]) {
            f0.plans[nw] = constant_plan(del, nw);
            continue;
        }
        Plan p = f.plans[w];
        p.vertex = nw;
        for (int& u : p.order) u = remap[u];
        f0.plans[nw] = std::move(p);
    }

    const std::vector<int> ctx = out_neighborhood(del.d, subj);
    Digraph nd;
    for (int w = 0; w < del.n(); ++w) nd.add_vertex(del.d.name(w));
    for (auto [uu, ww] : del.d.arcs())
        if (!in_subj[uu]) nd.add_arc(uu, ww);
    for (int s : subj)
        for (int u : ctx) nd.add_arc(s, u);
    Game ng = make_game(std::move(nd), del.h, del.g);

    Strategy nf;
    nf.plans.resize(ng.n());
    for (int w = 0; w < ng.n(); ++w)
        if (!in_subj[w]) nf.plans[w] = f0.plans[w];
    std::vector<Plan> splans(subj.size());
    for (std::size_t i = 0; i < subj.size(); ++i) {
        splans[i].vertex = subj[i];
        splans[i].order = ng.d.out(subj[i]);
    }
    std::vector<int> cover_a;
    for (int s : subj) cover_a.push_back(del.g[s]);
    PartialColoring pc = PartialColoring::empty(del.n());
    for (ColoringIter it(del, ctx); it.valid(); it.advance()) {
        for (std::size_t i = 0; i < ctx.size(); ++i)
            pc.set(ctx[i], it.tuple()[i]);
        AdmissibleEnds ends = admissible_ends(del, subj, f0, pc);
        CoverSearch cs = find_cover(ends.admissible, cover_a);
        if (!cs.covered)
            throw std::logic_error(
                "replace_vertex_with_arcs: admissible ends not coverable");
        for (std::size_t i = 0; i < subj.size(); ++i) {
            std::vector<int> gs;
            for (int val : cs.cover.values[i])
                if (val >= 0 && val < del.h[subj[i]]) gs.push_back(val);
            splans[i].table.push_back(finish_guesses(ng, subj[i], gs));
        }
    }
    for (std::size_t i = 0; i < subj.size(); ++i)
        nf.plans[subj[i]] = std::move(splans[i]);
    return Construction{std::move(ng), std::move(nf)};
}

}  // namespace hg
