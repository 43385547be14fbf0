#include "hatgames/plan.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hg {

long long row_index(const Game& game, const std::vector<int>& order,
                    const Coloring& c) {
    long long idx = 0;
    for (int u : order) idx = idx * game.h[u] + c[u];
    return idx;
}

long long table_size(const Game& game, const std::vector<int>& order) {
    long long s = 1;
    for (int u : order) s *= game.h[u];
    return s;
}

Plan constant_plan(const Game& game, int v) {
    Plan p;
    p.vertex = v;
    p.order = game.d.out(v);
    std::vector<int> row(game.g[v]);
    std::iota(row.begin(), row.end(), 0);
    p.table.assign(table_size(game, p.order), row);
    return p;
}

Strategy constant_strategy(const Game& game) {
    Strategy f;
    for (int v = 0; v < game.n(); ++v) f.plans.push_back(constant_plan(game, v));
    return f;
}

const std::vector<int>& guesses(const Game& game, const Strategy& f, int v,
                                const Coloring& c) {
    const Plan& p = f.plans[v];
    return p.table[row_index(game, p.order, c)];
}

bool guesses_right(const Game& game, const Strategy& f, int v, const Coloring& c) {
    const auto& gs = guesses(game, f, v, c);
    return std::binary_search(gs.begin(), gs.end(), c[v]);
}

void validate_plan(const Game& game, const Plan& p) {
    int v = p.vertex;
    if (v < 0 || v >= game.n()) throw std::invalid_argument("plan vertex out of range");
    std::vector<int> sorted = p.order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != game.d.out(v))
        throw std::invalid_argument("plan order is not the out-neighborhood of " +
                                    game.d.name(v));
    if (static_cast<long long>(p.table.size()) != table_size(game, p.order))
        throw std::invalid_argument("plan table size mismatch at " + game.d.name(v));
    for (const auto& row : p.table) {
        if (static_cast<int>(row.size()) != game.g[v])
            throw std::invalid_argument("guess set size mismatch at " + game.d.name(v));
        for (size_t i = 0; i < row.size(); ++i) {
            if (row[i] < 0 || row[i] >= game.h[v])
                throw std::invalid_argument("guess out of range at " + game.d.name(v));
            if (i > 0 && row[i] <= row[i - 1])
                throw std::invalid_argument("guess set not strictly sorted at " +
                                            game.d.name(v));
        }
    }
}

void validate_strategy(const Game& game, const Strategy& f) {
    if (static_cast<int>(f.plans.size()) != game.n())
        throw std::invalid_argument("strategy must have one plan per vertex");
    for (int v = 0; v < game.n(); ++v) {
        if (f.plans[v].vertex != v)
            throw std::invalid_argument("plans out of order");
        validate_plan(game, f.plans[v]);
    }
}

}  // namespace hg
