#include "hatgames/ease.hpp"

#include <algorithm>
#include <stdexcept>

namespace hg {

namespace {

// Can one vertex's parameters be relaxed from (h1, g1) to (h2, g2) by
// scale-then-lower-hatness-then-raise-guessness?
bool param_le(int h1, int g1, int h2, int g2) {
    int k_min = (h2 + h1 - 1) / h1;
    if (k_min < 1) k_min = 1;
    int k_max = g2 / g1;
    return k_min <= k_max;
}

// g1 <= g2: g2 is no harder.
bool ease_le(const Game& g1, const Game& g2) {
    std::vector<int> map(g1.n());
    for (int v = 0; v < g1.n(); ++v) {
        map[v] = g2.d.index_of(g1.d.name(v));
        if (map[v] < 0) return false;
    }
    for (auto [u, v] : g1.d.arcs())
        if (!g2.d.has_arc(map[u], map[v])) return false;
    for (int v = 0; v < g1.n(); ++v)
        if (!param_le(g1.h[v], g1.g[v], g2.h[map[v]], g2.g[map[v]])) return false;
    return true;
}

std::vector<int> pad_guesses(std::vector<int> row, int target, int h) {
    std::sort(row.begin(), row.end());
    for (int c = 0; c < h && static_cast<int>(row.size()) < target; ++c)
        if (!std::binary_search(row.begin(), row.end(), c))
            row.insert(std::lower_bound(row.begin(), row.end(), c), c);
    return row;
}

// Replace guesses >= h by the lowest colors < h not already used.
std::vector<int> clamp_guesses(const std::vector<int>& row, int h) {
    std::vector<int> kept;
    int dropped = 0;
    for (int c : row)
        (c < h ? (void)kept.push_back(c) : (void)++dropped);
    return pad_guesses(std::move(kept), static_cast<int>(kept.size()) + dropped, h);
}

// Odometer over the g2 hat space of `order`, calling fn(tuple).
template <class Fn>
void for_each_tuple(const Game& game, const std::vector<int>& order, Fn fn) {
    std::vector<int> t(order.size(), 0);
    while (true) {
        fn(t);
        int i = static_cast<int>(t.size()) - 1;
        for (; i >= 0; --i) {
            if (++t[i] < game.h[order[i]]) break;
            t[i] = 0;
        }
        if (i < 0) break;
    }
}

}  // namespace

EaseOrder compare_ease(const Game& g1, const Game& g2) {
    bool le12 = ease_le(g1, g2);
    bool le21 = ease_le(g2, g1);
    if (le12 && le21) return EaseOrder::Equal;
    if (le12) return EaseOrder::G2NoHarder;
    if (le21) return EaseOrder::G1NoHarder;
    return EaseOrder::Incomparable;
}

Strategy lift_strategy(const Game& g1, const Strategy& f, const Game& g2,
                       const EaseWitness& witness) {
    validate_strategy(g1, f);
    Strategy out;

    if (std::holds_alternative<ExtendWitness>(witness)) {
        std::vector<int> map(g1.n());
        for (int v = 0; v < g1.n(); ++v) {
            map[v] = g2.d.index_of(g1.d.name(v));
            if (map[v] < 0) throw std::invalid_argument("extend witness: missing vertex");
            if (g1.h[v] != g2.h[map[v]] || g1.g[v] != g2.g[map[v]])
                throw std::invalid_argument("extend witness: parameters changed");
        }
        for (auto [u, v] : g1.d.arcs())
            if (!g2.d.has_arc(map[u], map[v]))
                throw std::invalid_argument("extend witness: missing arc");
        std::vector<int> back(g2.n(), -1);
        for (int v = 0; v < g1.n(); ++v) back[map[v]] = v;
        for (int v2 = 0; v2 < g2.n(); ++v2) {
            int v1 = back[v2];
            if (v1 < 0) {
                out.plans.push_back(constant_plan(g2, v2));
                continue;
            }
            Plan p;
            p.vertex = v2;
            p.order = g2.d.out(v2);
            const Plan& old = f.plans[v1];
            // Position of each old input inside the new (wider) input tuple.
            std::vector<int> pos(old.order.size());
            for (size_t i = 0; i < old.order.size(); ++i) {
                auto it = std::find(p.order.begin(), p.order.end(), map[old.order[i]]);
                pos[i] = static_cast<int>(it - p.order.begin());
            }
            for_each_tuple(g2, p.order, [&](const std::vector<int>& t) {
                long long idx = 0;
                for (size_t i = 0; i < old.order.size(); ++i)
                    idx = idx * g1.h[old.order[i]] + t[pos[i]];
                p.table.push_back(old.table[idx]);
            });
            out.plans.push_back(std::move(p));
        }
        return out;
    }

    if (g1.d != g2.d) throw std::invalid_argument("witness requires equal digraphs");

    if (std::holds_alternative<LowerHatnessWitness>(witness)) {
        for (int v = 0; v < g1.n(); ++v) {
            if (g2.h[v] > g1.h[v] || g2.g[v] != g1.g[v])
                throw std::invalid_argument("lower-hatness witness violated");
        }
        for (int v = 0; v < g2.n(); ++v) {
            Plan p;
            p.vertex = v;
            p.order = g2.d.out(v);
            const Plan& old = f.plans[v];
            for_each_tuple(g2, p.order, [&](const std::vector<int>& t) {
                long long idx = 0;
                for (size_t i = 0; i < old.order.size(); ++i)
                    idx = idx * g1.h[old.order[i]] + t[i];
                p.table.push_back(clamp_guesses(old.table[idx], g2.h[v]));
            });
            out.plans.push_back(std::move(p));
        }
        return out;
    }

    if (std::holds_alternative<RaiseGuessnessWitness>(witness)) {
        for (int v = 0; v < g1.n(); ++v)
            if (g2.g[v] < g1.g[v] || g2.h[v] != g1.h[v])
                throw std::invalid_argument("raise-guessness witness violated");
        for (int v = 0; v < g2.n(); ++v) {
            Plan p = f.plans[v];
            for (auto& row : p.table) row = pad_guesses(row, g2.g[v], g2.h[v]);
            out.plans.push_back(std::move(p));
        }
        return out;
    }

    const auto& sw = std::get<ScaleVertexWitness>(witness);
    int sv = sw.vertex, k = sw.k;
    if (k < 1 || sv < 0 || sv >= g1.n() || g2.h[sv] != k * g1.h[sv] ||
        g2.g[sv] != k * g1.g[sv])
        throw std::invalid_argument("scale witness violated");
    for (int v = 0; v < g1.n(); ++v)
        if (v != sv && (g2.h[v] != g1.h[v] || g2.g[v] != g1.g[v]))
            throw std::invalid_argument("scale witness: other vertex changed");
    int h1v = g1.h[sv];
    for (int v = 0; v < g2.n(); ++v) {
        Plan p;
        p.vertex = v;
        p.order = g2.d.out(v);
        const Plan& old = f.plans[v];
        for_each_tuple(g2, p.order, [&](const std::vector<int>& t) {
            long long idx = 0;
            for (size_t i = 0; i < old.order.size(); ++i) {
                int c = t[i];
                if (old.order[i] == sv) c %= h1v;  // copy j+m*h1 of color j
                idx = idx * g1.h[old.order[i]] + c;
            }
            const auto& row = old.table[idx];
            if (v != sv) {
                p.table.push_back(row);
            } else {
                std::vector<int> scaled;
                for (int m = 0; m < k; ++m)
                    for (int c : row) scaled.push_back(c + m * h1v);
                std::sort(scaled.begin(), scaled.end());
                p.table.push_back(std::move(scaled));
            }
        });
        out.plans.push_back(std::move(p));
    }
    return out;
}

}  // namespace hg
