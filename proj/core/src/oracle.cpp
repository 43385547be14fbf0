#include "hatgames/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hatgames/solver.hpp"

namespace hg {

namespace {

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

bool everyone_wrong(const Game& game, const Strategy& f, const Coloring& c,
                    const std::vector<char>& skip) {
    for (int v = 0; v < game.n(); ++v)
        if (!skip[v] && guesses_right(game, f, v, c)) return false;
    return true;
}

}  // namespace

VerifyResult verify_strategy(const Game& game, const Strategy& f) {
    validate_strategy(game, f);
    VerifyResult res;
    res.wins = true;
    std::vector<char> skip(game.n(), 0);
    Coloring c(game.n(), 0);
    while (true) {
        ++res.colorings_checked;
        if (everyone_wrong(game, f, c, skip)) {
            res.wins = false;
            res.disprover = c;
            return res;
        }
        int i = game.n() - 1;
        for (; i >= 0; --i) {
            if (++c[i] < game.h[i]) break;
            c[i] = 0;
        }
        if (i < 0) break;
    }
    return res;
}

std::optional<Coloring> find_disprover(const Game& game, const Strategy& f,
                                       const PartialColoring& fixed) {
    std::vector<int> free;
    Coloring c(game.n(), 0);
    for (int v = 0; v < game.n(); ++v) {
        if (fixed.assigned(v)) {
            if (fixed.value[v] < 0 || fixed.value[v] >= game.h[v])
                throw std::invalid_argument("fixed color out of range");
            c[v] = fixed.value[v];
        } else {
            free.push_back(v);
        }
    }
    std::vector<char> skip(game.n(), 0);
    while (true) {
        if (everyone_wrong(game, f, c, skip)) return c;
        int i = static_cast<int>(free.size()) - 1;
        for (; i >= 0; --i) {
            if (++c[free[i]] < game.h[free[i]]) break;
            c[free[i]] = 0;
        }
        if (i < 0) return std::nullopt;
    }
}

Outcome decide_winnable(const Game& game, const SearchBudget& budget) {
    game.validate();
    if (game.n() == 0) throw std::invalid_argument("empty game");
    auto start = std::chrono::steady_clock::now();

    Int total = coloring_count(game);
    if (total > budget.max_colorings) return Outcome::unknown("coloring-budget-exceeded");
    std::uint64_t ncol = total.convert_to<std::uint64_t>();

    CoverProblem prob;
    std::vector<long long> offset(game.n());
    long long ncells = 0;
    for (int v = 0; v < game.n(); ++v) {
        offset[v] = ncells;
        ncells += table_size(game, game.d.out(v));
    }
    prob.cells.reserve(ncells);
    for (int v = 0; v < game.n(); ++v) {
        long long rows = table_size(game, game.d.out(v));
        for (long long r = 0; r < rows; ++r)
            prob.cells.push_back({game.g[v], game.h[v]});
    }
    prob.clauses.reserve(ncol);
    for_each_coloring(game, [&](const Coloring& c) {
        std::vector<std::pair<int, int>> clause;
        clause.reserve(game.n());
        for (int v = 0; v < game.n(); ++v) {
            long long cell = offset[v] + row_index(game, game.d.out(v), c);
            clause.emplace_back(static_cast<int>(cell), c[v]);
        }
        prob.clauses.push_back(std::move(clause));
    });
    // Color symmetry at vertex 0: relabeling its colors is a winnability-
    // preserving bijection of strategies, so its first table row can be
    // pinned to the lowest guess set.
    for (int c = 0; c < game.g[0]; ++c)
        prob.forced.emplace_back(static_cast<int>(offset[0]), c);

    CoverResult res = solve_cover(prob, budget.max_nodes);

    Outcome out;
    out.stats.nodes = res.nodes;
    out.stats.colorings = ncol;
    if (res.status == CoverStatus::Budget) {
        out.verdict = Verdict::Unknown;
        out.trace.push_back({"node-budget-exceeded", {}, ""});
    } else if (res.status == CoverStatus::Unsat) {
        out.verdict = Verdict::Unwinnable;
        out.trace.push_back({"exhaustive-search", {}, ""});
    } else {
        Strategy f;
        for (int v = 0; v < game.n(); ++v) {
            Plan p;
            p.vertex = v;
            p.order = game.d.out(v);
            long long rows = table_size(game, p.order);
            for (long long r = 0; r < rows; ++r)
                p.table.push_back(res.chosen[offset[v] + r]);
            f.plans.push_back(std::move(p));
        }
        if (!verify_strategy(game, f).wins)
            throw std::logic_error("internal: search produced a losing strategy");
        out.verdict = Verdict::Winnable;
        out.certificate = std::move(f);
    }
    out.stats.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    return out;
}

AdmissibleEnds admissible_ends(const Game& game, const std::vector<int>& subject,
                               const Strategy& f, const PartialColoring& context) {
    validate_strategy(game, f);
    std::vector<int> s = subject;
    std::sort(s.begin(), s.end());
    std::vector<int> ctx_domain = out_neighborhood(game.d, s);
    for (int v = 0; v < game.n(); ++v) {
        bool should = std::binary_search(ctx_domain.begin(), ctx_domain.end(), v);
        if (should != static_cast<bool>(context.assigned(v)))
            throw std::invalid_argument("context domain must be exactly N+(S) \\ S");
    }
    std::vector<char> in_s(game.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> free;
    for (int v = 0; v < game.n(); ++v)
        if (!in_s[v] && !context.assigned(v)) free.push_back(v);

    AdmissibleEnds ends;
    ends.subject = s;
    Coloring c(game.n(), 0);
    for (int v : ctx_domain) c[v] = context.value[v];
    std::vector<char> skip_s = in_s;
    std::vector<char> skip_none(game.n(), 0);

    for (ColoringIter it(game, s); it.valid(); it.advance()) {
        for (size_t i = 0; i < s.size(); ++i) c[s[i]] = it.tuple()[i];
        bool adm = false, acc = false;
        for (ColoringIter ext(game, free); ext.valid(); ext.advance()) {
            for (size_t i = 0; i < free.size(); ++i) c[free[i]] = ext.tuple()[i];
            if (!adm && everyone_wrong(game, f, c, skip_s)) adm = true;
            if (!acc && everyone_wrong(game, f, c, skip_none)) acc = true;
            if (adm && acc) break;
        }
        if (adm) ends.admissible.push_back(it.tuple());
        if (acc) ends.accepted.push_back(it.tuple());
    }
    return ends;
}

std::vector<Int> win_counts(const Game& game, const Strategy& f) {
    validate_strategy(game, f);
    std::vector<Int> counts(game.n(), 0);
    for_each_coloring(game, [&](const Coloring& c) {
        for (int v = 0; v < game.n(); ++v)
            if (guesses_right(game, f, v, c)) ++counts[v];
    });
    return counts;
}

}  // namespace hg
