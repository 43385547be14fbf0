#pragma once

#include <optional>

#include "hatgames/outcome.hpp"

namespace hg {

// j,k-hint with respect to subject S and audience R: k subsets A_i of the
// hat space of S, each point lying in exactly j of them. The audience learns
// "your point is not in A_i" (the utterance) for one truthful i.
struct Hint {
    int j = 0;
    int k = 0;
    std::vector<int> subject;   // S, canonical order
    std::vector<int> audience;  // R
    std::vector<std::vector<char>> parts;  // k rows, one flag per point of H(S)
};

long long hint_space_size(const Game& game, const std::vector<int>& subject);
long long hint_point_index(const Game& game, const std::vector<int>& subject,
                           const Coloring& c);

// Throws std::invalid_argument on multiplicity violations.
void validate_hint(const Game& game, const Hint& hint);

// Hint carried by a plan for v: A_i = f_v^{-1}(i); a g(v),h(v)-hint w.r.t.
// N+(v), N-(v). Bijective with plans.
Hint derive_hint(const Game& game, int v, const Plan& f_v);
Plan hint_to_plan(const Game& game, int v, const Hint& hint);

// Cyclic-union hint from a partition of H(S) into k parts:
// A_i = P_i u ... u P_{i+j-1} (indices mod k).
Hint partition_hint(const Game& game, const std::vector<int>& subject,
                    const std::vector<int>& audience,
                    const std::vector<std::vector<char>>& partition, int j);

// Game G \ v together with a hint whose indices refer to the reduced game.
struct HintGame {
    Game game;
    Hint hint;
};

HintGame derived_hint_game(const Game& game, int v, const Hint& hint);

// Audience members hold one plan per utterance; everyone else one plan.
struct PlanEnsemble {
    int vertex = -1;
    std::vector<Plan> plans;
};

struct HintStrategy {
    std::vector<PlanEnsemble> members;  // indexed by vertex
};

struct HintOutcome {
    Verdict verdict = Verdict::Unknown;
    std::optional<HintStrategy> certificate;
    SearchStats stats;
};

// A disprover is a pair (coloring c, utterance i) with c|S outside A_i and
// nobody right under the i-th ensemble.
std::optional<std::pair<Coloring, int>> find_hint_disprover(
    const HintGame& hgame, const HintStrategy& hs);

HintOutcome decide_hint_winnable(const HintGame& hgame,
                                 const SearchBudget& budget = {});

struct HintSearchResult {
    Verdict verdict = Verdict::Unknown;  // Winnable iff some hint wins
    std::optional<Hint> witness;         // indices refer to the input game
    SearchStats stats;
};

// Exhaustive search over extensional g(v),h(v)-hints w.r.t. N+(v), N-(v),
// up to permutation of part indices. Equivalent to decide_winnable(game).
HintSearchResult exists_winning_hint(const Game& game, int v,
                                     const SearchBudget& budget = {});

}  // namespace hg
