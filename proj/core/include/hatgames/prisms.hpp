#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hatgames/game.hpp"
#include "hatgames/outcome.hpp"
#include "hatgames/plan.hpp"

namespace hg {

using Point = std::vector<int>;

// Axis-aligned product set Z_1 x ... x Z_d; axis sets are kept sorted.
struct Prism {
  std::vector<std::vector<int>> axes;

  std::vector<int> measurements() const;
  bool contains(const Point& p) const;
};

// A-cover: values[i] holds exactly a[i] coordinate values for axis i.
struct CoverList {
  std::vector<int> a;
  std::vector<std::vector<int>> values;

  bool covers(const Point& p) const;
};

struct CoverSearch {
  bool covered = false;
  CoverList cover;
  std::vector<Point> sprawl_witness;
};

// Exact search for an A-cover of q. On failure the witness is an
// uncoverable subset minimized by greedy point removal.
CoverSearch find_cover(const std::vector<Point>& q, const std::vector<int>& a);

// Prism of the given measurements inside box \ q, via cover duality.
std::optional<Prism> prism_in_complement(const std::vector<int>& box,
                                         const std::vector<Point>& q,
                                         const std::vector<int>& target);

struct MinSprawl {
  std::size_t size = 0;
  std::vector<Point> witness;
};

// Minimum-size A-sprawl inside the box, none if everything is coverable.
std::optional<MinSprawl> min_sprawl(const std::vector<int>& box,
                                    const std::vector<int>& a);

struct PackingInstance {
  std::vector<int> d;
  std::vector<int> a;
  int x = 1;
  int y = 1;

  void validate() const;
};

// x prisms of measurements a inside prod [d_i], every point in at most y.
std::optional<std::vector<Prism>> solve_star_packing(const PackingInstance& inst);

// Winnability of a star game via prism packing; center strategy reads the
// packing as a hint, leaves guess axis complements.
Outcome star_outcome(const Game& game);

struct PartitionFamily {
  int giver = -1;
  // parts[q] lists the point indices of H(A) belonging to P_{i,q}.
  std::vector<std::vector<int>> parts;
};

struct BipartiteWitness {
  Outcome outcome;
  std::vector<PartitionFamily> families;
};

// Exhaustive search for the partition-family witness on a complete
// bipartite game; budget counts candidate families.
BipartiteWitness bipartite_witness_search(const Game& game,
                                          std::uint64_t budget = 2'000'000);

}  // namespace hg
