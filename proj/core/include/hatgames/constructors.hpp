#pragma once

#include <string>
#include <vector>

#include "hatgames/game.hpp"
#include "hatgames/plan.hpp"

namespace hg {

struct Construction {
  Game game;
  Strategy strategy;
};

// Glue two Latvian games sharing exactly the named vertex; its hatness
// multiplies. Both input strategies must win.
Construction product_single_point(const Game& g1, const Strategy& f1,
                                  const Game& g2, const Strategy& f2,
                                  const std::string& shared);

// Attach x with parameters (hx, gx) universal to ys, raising h by k[i] and
// g by q[i] on ys; wins via a partition hint over nested boxes.
Construction attach_vertex_general(const Game& game, const Strategy& f,
                                   const std::vector<int>& ys,
                                   const std::vector<int>& q,
                                   const std::vector<int>& k, int hx, int gx,
                                   const std::string& xname);

// Attach x with (hx, gx) universal to a clique ys; h scales by hx and g by
// hx - gx on ys. Built as a clique product with a two-vertex game.
Construction attach_vertex_clique(const Game& game, const Strategy& f,
                                  const std::vector<int>& ys, int hx, int gx,
                                  const std::string& xname);

// Attach x with h(x) = 3, g(x) = 1 universal to ys, where b in ys keeps
// hatness 2 and the rest of ys gain h += g.
Construction attach_hatness3(const Game& game, const Strategy& f,
                             const std::vector<int>& ys, int b,
                             const std::string& xname);

struct PathAttachment {
  std::vector<int> pattern;
  std::vector<int> x;
  bool x_clique = false;
  std::vector<int> z;
  bool z_clique = false;
  std::string name_prefix = "p";
};

// Glue a path of the weak (2,3,4..4 / 3,2,4..4) or strong
// (4..,3,2,3,..4 / 4..,2,3,3,..4) hatness patterns between x and z.
// Clique endpoints double their hatnesses, others add their guessnesses;
// weak patterns always treat x the second way.
Construction attach_path(const Game& game, const Strategy& f,
                         const PathAttachment& spec);

// Strong product over cliques; middle vertices multiply parameters and play
// split-brain on imaginary color sums.
Construction clique_product(const std::vector<Construction>& operands,
                            const std::vector<std::vector<int>>& cliques);

// Cartesian product of a clique side with an independent set side.
Construction clique_general_product(const Game& g1, const Strategy& f1,
                                    const std::vector<int>& h1,
                                    const Game& g2, const Strategy& f2,
                                    const std::vector<int>& h2);

// Cartesian product over arbitrary subsets with surplus guarantees r[i]:
// whenever all of V_i minus H_i are wrong, at most r[i] of H_i are wrong.
Construction general_product(const std::vector<Construction>& operands,
                             const std::vector<std::vector<int>>& parts,
                             const std::vector<int>& surplus);

// Delete a directionless v with independent neighborhood and low ratio,
// adding arcs that make N(v) a peer set; covers admissible ends exactly.
Construction replace_vertex_with_arcs(const Game& game, const Strategy& f,
                                      int v);

}  // namespace hg
