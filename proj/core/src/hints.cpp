#include "hatgames/hints.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "hatgames/solver.hpp"

namespace hg {

long long hint_space_size(const Game& game, const std::vector<int>& subject) {
    long long s = 1;
    for (int v : subject) s *= game.h[v];
    return s;
}

long long hint_point_index(const Game& game, const std::vector<int>& subject,
                           const Coloring& c) {
    long long idx = 0;
    for (int v : subject) idx = idx * game.h[v] + c[v];
    return idx;
}

void validate_hint(const Game& game, const Hint& hint) {
    if (hint.k < 1 || hint.j < 1 || hint.j > hint.k)
        throw std::invalid_argument("hint needs 1 <= j <= k");
    if (static_cast<int>(hint.parts.size()) != hint.k)
        throw std::invalid_argument("hint part count != k");
    long long points = hint_space_size(game, hint.subject);
    for (const auto& part : hint.parts)
        if (static_cast<long long>(part.size()) != points)
            throw std::invalid_argument("hint part size mismatch");
    for (long long p = 0; p < points; ++p) {
        int m = 0;
        for (const auto& part : hint.parts) m += part[p] ? 1 : 0;
        if (m != hint.j)
            throw std::invalid_argument("hint multiplicity violated at point " +
                                        std::to_string(p));
    }
}

Hint derive_hint(const Game& game, int v, const Plan& f_v) {
    validate_plan(game, f_v);
    Hint hint;
    hint.j = game.g[v];
    hint.k = game.h[v];
    hint.subject = game.d.out(v);
    hint.audience = game.d.in(v);
    long long points = hint_space_size(game, hint.subject);
    hint.parts.assign(hint.k, std::vector<char>(points, 0));
    // f_v's order may permute N+(v); re-index rows in canonical order.
    Coloring c(game.n(), 0);
    std::vector<int> t(hint.subject.size(), 0);
    for (long long p = 0; p < points; ++p) {
        for (size_t i = 0; i < hint.subject.size(); ++i) c[hint.subject[i]] = t[i];
        for (int guess : f_v.table[row_index(game, f_v.order, c)])
            hint.parts[guess][p] = 1;
        for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
            if (++t[i] < game.h[hint.subject[i]]) break;
            t[i] = 0;
        }
    }
    return hint;
}

Plan hint_to_plan(const Game& game, int v, const Hint& hint) {
    validate_hint(game, hint);
    if (hint.subject != game.d.out(v) || hint.j != game.g[v] || hint.k != game.h[v])
        throw std::invalid_argument("hint parameters do not match vertex");
    Plan p;
    p.vertex = v;
    p.order = game.d.out(v);
    long long points = hint_space_size(game, hint.subject);
    for (long long pt = 0; pt < points; ++pt) {
        std::vector<int> row;
        for (int i = 0; i < hint.k; ++i)
            if (hint.parts[i][pt]) row.push_back(i);
        p.table.push_back(std::move(row));
    }
    return p;
}

Hint partition_hint(const Game& game, const std::vector<int>& subject,
                    const std::vector<int>& audience,
                    const std::vector<std::vector<char>>& partition, int j) {
    int k = static_cast<int>(partition.size());
    long long points = hint_space_size(game, subject);
    for (long long p = 0; p < points; ++p) {
        int m = 0;
        for (const auto& part : partition) m += part[p] ? 1 : 0;
        if (m != 1) throw std::invalid_argument("not a partition of H(S)");
    }
    Hint hint;
    hint.j = j;
    hint.k = k;
    hint.subject = subject;
    hint.audience = audience;
    hint.parts.assign(k, std::vector<char>(points, 0));
    for (int i = 0; i < k; ++i)
        for (int d = 0; d < j; ++d)
            for (long long p = 0; p < points; ++p)
                if (partition[(i + d) % k][p]) hint.parts[i][p] = 1;
    validate_hint(game, hint);
    return hint;
}

HintGame derived_hint_game(const Game& game, int v, const Hint& hint) {
    if (hint.subject != game.d.out(v) || hint.audience != game.d.in(v) ||
        hint.j != game.g[v] || hint.k != game.h[v])
        throw std::invalid_argument("hint is not a g(v),h(v)-hint w.r.t. N+(v),N-(v)");
    validate_hint(game, hint);
    std::vector<int> keep;
    for (int w = 0; w < game.n(); ++w)
        if (w != v) keep.push_back(w);
    HintGame hgame;
    hgame.game = restrict_game(game, keep);
    hgame.hint = hint;
    auto remap = [&](std::vector<int>& verts) {
        for (int& w : verts) w = w < v ? w : w - 1;
    };
    remap(hgame.hint.subject);
    remap(hgame.hint.audience);
    return hgame;
}

namespace {

bool is_audience(const HintGame& hgame, int w) {
    return std::find(hgame.hint.audience.begin(), hgame.hint.audience.end(), w) !=
           hgame.hint.audience.end();
}

template <class Fn>
void for_each_coloring(const Game& game, Fn fn) {
    Coloring c(game.n(), 0);
    while (true) {
        fn(c);
        int i = game.n() - 1;
        for (; i >= 0; --i) {
            if (++c[i] < game.h[i]) break;
            c[i] = 0;
        }
        if (i < 0) break;
    }
}

}  // namespace

std::optional<std::pair<Coloring, int>> find_hint_disprover(
    const HintGame& hgame, const HintStrategy& hs) {
    const Game& game = hgame.game;
    std::optional<std::pair<Coloring, int>> found;
    for (int i = 0; i < hgame.hint.k && !found; ++i) {
        for_each_coloring(game, [&](const Coloring& c) {
            if (found) return;
            if (hgame.hint.parts[i][hint_point_index(game, hgame.hint.subject, c)])
                return;  // A_i true: utterance would be a lie
            for (int w = 0; w < game.n(); ++w) {
                const auto& ens = hs.members[w].plans;
                const Plan& p = ens[ens.size() == 1 ? 0 : i];
                const auto& gs = p.table[row_index(game, p.order, c)];
                if (std::binary_search(gs.begin(), gs.end(), c[w])) return;
            }
            found = {c, i};
        });
    }
    return found;
}

HintOutcome decide_hint_winnable(const HintGame& hgame, const SearchBudget& budget) {
    const Game& game = hgame.game;
    const Hint& hint = hgame.hint;
    auto start = std::chrono::steady_clock::now();

    Int total = coloring_count(game) * hint.k;
    HintOutcome out;
    if (total > budget.max_colorings) {
        out.verdict = Verdict::Unknown;
        return out;
    }

    CoverProblem prob;
    // Cell layout: per vertex, one plan (non-audience) or k plans (audience).
    std::vector<long long> offset(game.n());
    std::vector<int> copies(game.n());
    long long ncells = 0;
    for (int w = 0; w < game.n(); ++w) {
        offset[w] = ncells;
        copies[w] = is_audience(hgame, w) ? hint.k : 1;
        ncells += copies[w] * table_size(game, game.d.out(w));
    }
    for (int w = 0; w < game.n(); ++w) {
        long long rows = table_size(game, game.d.out(w));
        for (long long r = 0; r < copies[w] * rows; ++r)
            prob.cells.push_back({game.g[w], game.h[w]});
    }
    for (int i = 0; i < hint.k; ++i) {
        for_each_coloring(game, [&](const Coloring& c) {
            if (hint.parts[i][hint_point_index(game, hint.subject, c)]) return;
            std::vector<std::pair<int, int>> clause;
            for (int w = 0; w < game.n(); ++w) {
                long long rows = table_size(game, game.d.out(w));
                long long cell = offset[w] + (copies[w] == 1 ? 0 : i * rows) +
                                 row_index(game, game.d.out(w), c);
                clause.emplace_back(static_cast<int>(cell), c[w]);
            }
            prob.clauses.push_back(std::move(clause));
        });
    }

    CoverResult res = solve_cover(prob, budget.max_nodes);
    out.stats.nodes = res.nodes;
    out.stats.colorings = total.convert_to<std::uint64_t>();
    if (res.status == CoverStatus::Budget) {
        out.verdict = Verdict::Unknown;
    } else if (res.status == CoverStatus::Unsat) {
        out.verdict = Verdict::Unwinnable;
    } else {
        out.verdict = Verdict::Winnable;
        HintStrategy hs;
        for (int w = 0; w < game.n(); ++w) {
            PlanEnsemble ens;
            ens.vertex = w;
            long long rows = table_size(game, game.d.out(w));
            for (int i = 0; i < copies[w]; ++i) {
                Plan p;
                p.vertex = w;
                p.order = game.d.out(w);
                for (long long r = 0; r < rows; ++r)
                    p.table.push_back(res.chosen[offset[w] + i * rows + r]);
                ens.plans.push_back(std::move(p));
            }
            hs.members.push_back(std::move(ens));
        }
        if (find_hint_disprover(hgame, hs))
            throw std::logic_error("internal: hint search produced a losing strategy");
        out.certificate = std::move(hs);
    }
    out.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return out;
}

namespace {

// Lexicographic canonicity under permutations of the k part indices; each
// point's membership is encoded as a bitmask over parts.
bool canonical_under_part_permutation(const std::vector<std::uint32_t>& point_masks,
                                      int k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        // Compare permuted mask sequence with the original.
        for (std::uint32_t m : point_masks) {
            std::uint32_t pm = 0;
            for (int i = 0; i < k; ++i)
                if ((m >> i) & 1u) pm |= 1u << perm[i];
            if (pm != m) {
                if (pm < m) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace

HintSearchResult exists_winning_hint(const Game& game, int v,
                                     const SearchBudget& budget) {
    game.validate();
    HintSearchResult result;
    auto start = std::chrono::steady_clock::now();

    int j = game.g[v], k = game.h[v];
    const std::vector<int>& subject = game.d.out(v);
    long long points = hint_space_size(game, subject);
    if (points > 24) {
        result.verdict = Verdict::Unknown;
        return result;
    }

    // All j-subsets of [k] as bitmasks, ascending.
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 0; m < (1u << k); ++m)
        if (__builtin_popcount(m) == j) subsets.push_back(m);

    std::vector<size_t> choice(points, 0);
    Hint hint;
    hint.j = j;
    hint.k = k;
    hint.subject = subject;
    hint.audience = game.d.in(v);
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    while (true) {
        std::vector<std::uint32_t> masks(points);
        for (long long p = 0; p < points; ++p) masks[p] = subsets[choice[p]];
        if (canonical_under_part_permutation(masks, k)) {
            hint.parts.assign(k, std::vector<char>(points, 0));
            for (long long p = 0; p < points; ++p)
                for (int i = 0; i < k; ++i)
                    if ((masks[p] >> i) & 1u) hint.parts[i][p] = 1;
            HintOutcome ho = decide_hint_winnable(derived_hint_game(game, v, hint),
                                                  budget);
            nodes += ho.stats.nodes;
            if (ho.verdict == Verdict::Winnable) {
                result.verdict = Verdict::Winnable;
                result.witness = hint;
                break;
            }
            if (ho.verdict == Verdict::Unknown) budget_hit = true;
        }
        long long p = points - 1;
        for (; p >= 0; --p) {
            if (++choice[p] < subsets.size()) break;
            choice[p] = 0;
        }
        if (p < 0) {
            result.verdict = budget_hit ? Verdict::Unknown : Verdict::Unwinnable;
            break;
        }
    }
    result.stats.nodes = nodes;
    result.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return result;
}

}  // namespace hg
