#include "hatgames/admissible.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hg {

std::pair<int, int> WarsawGraph::decode(long long id) const {
    for (int v = base.n() - 1; v >= 0; --v)
        if (offset[v] <= id) return {v, static_cast<int>(id - offset[v])};
    throw std::out_of_range("warsaw id");
}

WarsawGraph build_warsaw(const Game& game) {
    WarsawGraph w;
    w.base = game;
    long long total = 0;
    for (int v = 0; v < game.n(); ++v) {
        w.offset.push_back(total);
        total += game.h[v];
    }
    w.vertex_count = total;
    for (auto [u, v] : game.d.arcs())
        w.arc_count += static_cast<long long>(game.h[u]) * game.h[v];
    return w;
}

namespace {

// Wrong-guess check for covered base vertices whose out-neighborhood lies
// inside the covered set; `covered_color[v] < 0` means uncovered.
bool covered_all_wrong(const Game& game, const Strategy& f,
                       const std::vector<int>& covered_color) {
    Coloring c(game.n(), 0);
    for (int v = 0; v < game.n(); ++v)
        if (covered_color[v] >= 0) c[v] = covered_color[v];
    for (int v = 0; v < game.n(); ++v) {
        if (covered_color[v] < 0) continue;
        bool full = true;
        for (int u : game.d.out(v))
            if (covered_color[u] < 0) {
                full = false;
                break;
            }
        if (full && guesses_right(game, f, v, c)) return false;
    }
    return true;
}

std::vector<int> covered_of(const Game& game, const PathState& st) {
    std::vector<int> covered(game.n(), -1);
    for (size_t i = 0; i < st.base_path.size(); ++i)
        covered[st.base_path[i]] = st.colors[i];
    return covered;
}

}  // namespace

bool is_admissible(const Game& game, const PathState& st) {
    if (st.base_path.size() != st.colors.size()) return false;
    for (size_t i = 0; i + 1 < st.base_path.size(); ++i)
        if (!game.d.has_arc(st.base_path[i], st.base_path[i + 1]) &&
            !game.d.has_arc(st.base_path[i + 1], st.base_path[i]))
            return false;
    return covered_all_wrong(game, st.strategy, covered_of(game, st));
}

Continuations continuations(const Game& game, const PathState& st, Direction dir) {
    if (st.base_path.empty()) throw std::invalid_argument("empty path state");
    int end = dir == Direction::Right ? st.base_path.back() : st.base_path.front();
    std::vector<int> covered = covered_of(game, st);
    // Unique uncovered base neighbor of the end (undirected adjacency).
    int next = -1;
    for (int u : game.d.out(end)) {
        if (covered[u] >= 0) continue;
        if (next >= 0) throw std::invalid_argument("end has several uncovered neighbors");
        next = u;
    }
    if (next < 0) throw std::invalid_argument("direction runs off the base path");

    Continuations cont;
    cont.next_base = next;
    for (int q = 0; q < game.h[next]; ++q) {
        covered[next] = q;
        if (covered_all_wrong(game, st.strategy, covered)) cont.colors.push_back(q);
        covered[next] = -1;
    }
    return cont;
}

GrowResult grow_path(const Game& game, const Strategy& f, const PathState& seed,
                     int target) {
    GrowResult res;
    res.state = seed;
    res.state.strategy = f;
    if (!is_admissible(game, res.state)) throw std::invalid_argument("seed not admissible");

    while (true) {
        std::vector<int> covered = covered_of(game, res.state);
        if (covered[target] >= 0) {
            res.grown = true;
            return res;
        }
        Continuations cur;
        Direction dir = Direction::Right;
        try {
            cur = continuations(game, res.state, dir);
        } catch (const std::invalid_argument&) {
            dir = Direction::Left;
            cur = continuations(game, res.state, dir);
        }
        if (game.h[cur.next_base] < 3) {
            res.blocked = "hatness of next slab < 3";
            return res;
        }
        if (cur.colors.size() < 2) {
            res.blocked = "fewer than two live continuations";
            return res;
        }
        // Greedy: keep the continuation with the most onward continuations.
        int best_color = -1;
        int best_onward = -1;
        for (int q : cur.colors) {
            PathState ext = res.state;
            if (dir == Direction::Right) {
                ext.base_path.push_back(cur.next_base);
                ext.colors.push_back(q);
            } else {
                ext.base_path.insert(ext.base_path.begin(), cur.next_base);
                ext.colors.insert(ext.colors.begin(), q);
            }
            int onward = 0;
            if (cur.next_base == target) {
                onward = 0;
            } else {
                try {
                    onward = static_cast<int>(continuations(game, ext, dir).colors.size());
                } catch (const std::invalid_argument&) {
                    onward = 0;
                }
            }
            if (onward > best_onward) {
                best_onward = onward;
                best_color = q;
            }
        }
        if (dir == Direction::Right) {
            res.state.base_path.push_back(cur.next_base);
            res.state.colors.push_back(best_color);
        } else {
            res.state.base_path.insert(res.state.base_path.begin(), cur.next_base);
            res.state.colors.insert(res.state.colors.begin(), best_color);
        }
        if (cur.next_base != target && best_onward < 2) {
            res.blocked = "fewer than two live continuations";
            return res;
        }
    }
}

std::optional<Coloring> find_disprover_via_paths(const Game& game,
                                                 const Strategy& f) {
    validate_strategy(game, f);
    std::vector<int> order;
    bool cycle = is_undirected_cycle(game.d, &order);
    if (!cycle) {
        // Undirected path: connected, degrees <= 2, exactly two endpoints.
        if (!is_undirected(game.d) || !is_forest(game.d))
            throw std::invalid_argument("supported bases: path or cycle");
        int n = game.n();
        std::vector<int> ends;
        for (int v = 0; v < n; ++v) {
            if (game.d.out_degree(v) > 2) throw std::invalid_argument("base not a path");
            if (game.d.out_degree(v) <= 1) ends.push_back(v);
        }
        if (n == 1) {
            order = {0};
        } else {
            if (ends.size() != 2) throw std::invalid_argument("base not a path");
            order.push_back(std::min(ends[0], ends[1]));
            int prev = -1;
            while (static_cast<int>(order.size()) < n) {
                int cur = order.back();
                int nxt = -1;
                for (int u : game.d.out(cur))
                    if (u != prev) nxt = u;
                if (nxt < 0) throw std::invalid_argument("base not a path");
                prev = cur;
                order.push_back(nxt);
            }
        }
    }

    int n = game.n();
    std::vector<int> covered(n, -1);
    Coloring c(n, 0);

    // Position p in `order` has full sight once all its base neighbors are
    // assigned; with this ordering that happens right after assigning the
    // position that completes its neighborhood.
    auto ok_at = [&](int v) {
        for (int u : game.d.out(v))
            if (covered[u] < 0) return true;  // not fully sighted yet
        for (int u = 0; u < n; ++u) c[u] = std::max(covered[u], 0);
        return !guesses_right(game, f, v, c);
    };

    std::function<bool(int)> dfs = [&](int pos) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        for (int q = 0; q < game.h[v]; ++q) {
            covered[v] = q;
            bool ok = true;
            // Newly decidable vertices: v itself and earlier neighbors.
            if (!ok_at(v)) ok = false;
            for (int u : game.d.out(v))
                if (ok && covered[u] >= 0 && !ok_at(u)) ok = false;
            if (ok && dfs(pos + 1)) return true;
            covered[v] = -1;
        }
        return false;
    };

    if (!dfs(0)) return std::nullopt;
    Coloring result(n);
    for (int v = 0; v < n; ++v) result[v] = covered[v];
    // Re-verify before returning.
    for (int v = 0; v < n; ++v)
        if (guesses_right(game, f, v, result)) return std::nullopt;
    return result;
}

}  // namespace hg
