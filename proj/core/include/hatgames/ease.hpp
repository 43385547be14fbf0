#pragma once

#include <variant>

#include "hatgames/plan.hpp"

namespace hg {

// Ease relation on games: G1 <= G2 means G2 is no harder (a winning strategy
// for G1 can be lifted to G2). Generators: add sages/arcs with unchanged
// parameters elsewhere; lower hatness; raise guessness; per-vertex k-fold
// scaling of both parameters.
enum class EaseOrder { G2NoHarder, G1NoHarder, Equal, Incomparable };

// Sound, not complete: checks the one-step generators and the greedy
// composition scale-then-relax per vertex; deep transitive chains may come
// back Incomparable.
EaseOrder compare_ease(const Game& g1, const Game& g2);

// One-step lift witnesses.
struct ExtendWitness {};  // g2 adds vertices and/or arcs; params equal on V(g1)
struct LowerHatnessWitness {};     // h2(v) <= h1(v) everywhere, g equal
struct RaiseGuessnessWitness {};   // g2(v) >= g1(v) everywhere, h equal
struct ScaleVertexWitness {        // h2(v) = k h1(v), g2(v) = k g1(v), else equal
    int vertex;
    int k;
};
using EaseWitness = std::variant<ExtendWitness, LowerHatnessWitness,
                                 RaiseGuessnessWitness, ScaleVertexWitness>;

// Lift a winning strategy across one generator step. Throws
// std::invalid_argument when the witness does not match the games.
Strategy lift_strategy(const Game& g1, const Strategy& f, const Game& g2,
                       const EaseWitness& witness);

}  // namespace hg
