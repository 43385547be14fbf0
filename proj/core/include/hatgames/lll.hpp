#pragma once

#include <optional>
#include <vector>

#include "hatgames/digraph.hpp"
#include "hatgames/game.hpp"
#include "hatgames/plan.hpp"

namespace hg {

// Dependency digraph of the events "sage v guesses right": the transpose
// of the visibility digraph.
Digraph dual_dependency(const Digraph& d);

struct LllResult {
  bool unwinnable = false;
  std::vector<Rat> x;
};

// Certifies unwinnability when r(v) <= x(v) * prod over in-neighbors u of
// (1 - x(u)) holds everywhere; never claims winnable.
LllResult lll_unwinnable_test(const Game& game, const std::vector<Rat>& x);

// Auto mode: starts from x == 1/(max in-degree + 1) and refines by
// coordinate ascent on a rational grid.
LllResult lll_unwinnable_test(const Game& game);

struct DegreeBounds {
  std::optional<Rat> directed;
  std::optional<Rat> undirected;
};

// Upper bounds on the unwinnable-ratio threshold: e * (max in-degree + 1)
// via a rational bound on e, and Delta^Delta / (Delta-1)^(Delta-1) for
// graphs with Delta >= 2.
DegreeBounds degree_bounds(const Digraph& d);

// Sum over acyclic subsets T of s of prod_{v in T} (-w[v]), exact.
Rat acyclicity_poly(const Digraph& d, const std::vector<Rat>& w,
                    const std::vector<bool>& s);

struct ShearerReport {
  int k = 0;
  Game game;
  Strategy strategy;
  Int colorings;
  Int all_wrong;
  // Indexed by vertex-subset bitmask: acyclicity polynomial at -r 1_S.
  std::vector<Rat> q_values;
};

// The odd directed cycle with 2 hats and identical follow-the-arc plans:
// winnable, yet the acyclicity polynomial stays positive on every subset.
ShearerReport shearer_counterexample(int k);

// Undirected games: positive independence polynomial at -r 1_S for every S
// certifies unwinnability.
bool shearer_unwinnable_test(const Game& game);

}  // namespace hg
