#pragma once

#include <optional>
#include <vector>

#include "hatgames/game.hpp"
#include "hatgames/outcome.hpp"

namespace hg {

struct ReductionTrace {
  std::vector<TraceStep> steps;
  Game residual;
  // Set when a rewrite already decides the game (hatness collapse, empty
  // residual is left to the caller).
  std::optional<Verdict> decided;
};

// Applies outcome-preserving deletion rules to fixpoint: redundant vision,
// high ratio, cheap leaves, Latvian hatness-2 leaf rewrites, acyclic strip.
ReductionTrace reduce_game(const Game& game);

// Complete graph: winnable iff sum g/h >= 1; interval strategy certificate.
Outcome classify_clique(const Game& game);

// Directed cycle: Latvian h == 2 rule, Polish h <= 2g rule, the equal-
// hatness triangle divisibility rule, and the arc ratio bound.
Outcome classify_directed_cycle(const Game& game);

// Latvian forest: delete v with h(v) > 2^deg(v) to fixpoint; winnable iff
// the residual is nonempty, with a product-of-edges certificate.
Outcome classify_latvian_tree(const Game& game);

// Latvian cycle: C3 by ratio sum, C4 by the maximal-sequence list, longer
// cycles by deleting h >= 5 vertices or the h <= 4 sequence rules.
Outcome classify_latvian_cycle(const Game& game);

// Reduce, split into strong components, dispatch to family classifiers.
Outcome classify_auto(const Game& game);

}  // namespace hg
