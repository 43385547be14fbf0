#pragma once

#include <optional>
#include <string>

#include "hatgames/plan.hpp"

namespace hg {

// Blown-up graph: one vertex (i, p) per base vertex i and color p, with an
// arc (i,p) -> (j,q) exactly when i sees j. Induced subgraphs with at most
// one vertex per base vertex are partial colorings; such a subgraph is
// admissible when every covered base vertex with fully covered
// out-neighborhood guesses wrong.
struct WarsawGraph {
    Game base;
    std::vector<long long> offset;  // id(i, p) = offset[i] + p
    long long vertex_count = 0;
    long long arc_count = 0;

    long long id(int base_vertex, int color) const {
        return offset[base_vertex] + color;
    }
    std::pair<int, int> decode(long long id) const;
};

WarsawGraph build_warsaw(const Game& game);

// A path in the Warsaw graph along an induced base path, one color per
// covered base vertex. Endpoints are quasi: the wrong-guess condition is
// only enforced where the whole out-neighborhood is covered.
struct PathState {
    Strategy strategy;
    std::vector<int> base_path;  // consecutive entries adjacent in the base
    std::vector<int> colors;     // parallel to base_path
};

bool is_admissible(const Game& game, const PathState& state);

enum class Direction { Left, Right };

struct Continuations {
    int next_base = -1;       // the neighbor slab being entered
    std::vector<int> colors;  // admissible colors for it, ascending
};

// Colors of the next slab that keep the path admissible. Throws when the
// direction runs off the end of the base path.
Continuations continuations(const Game& game, const PathState& state,
                            Direction dir);

struct GrowResult {
    bool grown = false;
    PathState state;
    std::string blocked;  // violated hypothesis when not grown
};

// Greedy extension toward `target`, keeping at least two live continuations
// while the two-slabs-ahead hatnesses stay >= 3; stops with a named blocked
// hypothesis otherwise.
GrowResult grow_path(const Game& game, const Strategy& f, const PathState& seed,
                     int target);

// Exhaustive admissible-coloring search on path or cycle bases. Sound: any
// returned coloring is re-verified as a disprover of f. Nullopt means the
// search found nothing. Throws on other topologies.
std::optional<Coloring> find_disprover_via_paths(const Game& game,
                                                 const Strategy& f);

}  // namespace hg
