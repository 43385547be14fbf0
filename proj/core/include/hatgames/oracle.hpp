#pragma once

#include <optional>

#include "hatgames/outcome.hpp"
#include "hatgames/plan.hpp"

namespace hg {

struct VerifyResult {
    bool wins = false;
    std::optional<Coloring> disprover;  // lexicographically least
    std::uint64_t colorings_checked = 0;
};

// Exhaustive check over all colorings in canonical row-major order.
VerifyResult verify_strategy(const Game& game, const Strategy& f);

// Lexicographically least disprover among extensions of `fixed`, or nullopt.
std::optional<Coloring> find_disprover(const Game& game, const Strategy& f,
                                       const PartialColoring& fixed);

// Exact winnability decision. Backtracking over plan-table cells: each cell
// is a finite-domain variable, each coloring the clause "some sage guesses
// her own color". Deterministic; certificates are canonical.
Outcome decide_winnable(const Game& game, const SearchBudget& budget = {});

// L' (and L): partial colorings d on S that extend, together with `context`
// on N+(S) \ S, to a coloring where every sage outside S (resp. every sage)
// guesses wrong under f.
struct AdmissibleEnds {
    std::vector<int> subject;                 // S, canonical order
    std::vector<std::vector<int>> admissible; // L', tuples parallel to subject
    std::vector<std::vector<int>> accepted;   // L, subset of L'
};

AdmissibleEnds admissible_ends(const Game& game, const std::vector<int>& subject,
                               const Strategy& f, const PartialColoring& context);

// Exact count, per vertex, of colorings where the vertex guesses right.
std::vector<Int> win_counts(const Game& game, const Strategy& f);

}  // namespace hg
