#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hatgames/outcome.hpp"

namespace hg {

// Covering CSP underlying winnability search. A cell is a plan-table entry: a
// set of at most `capacity` colors from [num_colors]. A clause is a coloring:
// it is satisfied once some listed (cell, color) pair has that color chosen
// in that cell. Find an assignment satisfying every clause.
struct CoverProblem {
    struct Cell {
        int capacity;
        int num_colors;  // <= 64
    };
    std::vector<Cell> cells;
    std::vector<std::vector<std::pair<int, int>>> clauses;  // (cell, color)
    std::vector<std::pair<int, int>> forced;                // pre-committed picks
};

enum class CoverStatus { Sat, Unsat, Budget };

struct CoverResult {
    CoverStatus status = CoverStatus::Unsat;
    // Per cell: chosen colors, sorted, padded to capacity with the lowest
    // unused colors (canonical).
    std::vector<std::vector<int>> chosen;
    std::uint64_t nodes = 0;
};

// Deterministic backtracking: most-constrained clause first, options in
// listed order; unit propagation on cells that reach capacity.
CoverResult solve_cover(const CoverProblem& problem, std::uint64_t max_nodes);

}  // namespace hg
