#pragma once

#include <vector>

#include "hatgames/game.hpp"

namespace hg {

// Lookup table for one sage: maps each tuple of colors on her out-neighborhood
// (row-major over `order`, first entry slowest) to a sorted set of exactly
// g(v) guesses in [h(v)].
struct Plan {
    int vertex = -1;
    std::vector<int> order;               // out-neighborhood, canonical order
    std::vector<std::vector<int>> table;  // prod h(order) rows

    bool operator==(const Plan& o) const = default;
};

struct Strategy {
    std::vector<Plan> plans;  // indexed by vertex

    bool operator==(const Strategy& o) const = default;
};

// Row-major index of the colors of `order` under coloring c.
long long row_index(const Game& game, const std::vector<int>& order,
                    const Coloring& c);
long long table_size(const Game& game, const std::vector<int>& order);

// Plan with every row equal to {0, .., g(v)-1}.
Plan constant_plan(const Game& game, int v);
Strategy constant_strategy(const Game& game);

// Guesses of v under c.
const std::vector<int>& guesses(const Game& game, const Strategy& f, int v,
                                const Coloring& c);
bool guesses_right(const Game& game, const Strategy& f, int v, const Coloring& c);

// Throws std::invalid_argument on shape/range violations.
void validate_plan(const Game& game, const Plan& p);
void validate_strategy(const Game& game, const Strategy& f);

}  // namespace hg
