#include "hatgames/lll.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hg {

Digraph dual_dependency(const Digraph& d) {
    Digraph t;
    for (int v = 0; v < d.n(); ++v) t.add_vertex(d.name(v));
    for (auto [u, v] : d.arcs()) t.add_arc(v, u);
    return t;
}

namespace {

bool lll_holds(const Game& game, const std::vector<Rat>& x) {
    for (int v = 0; v < game.n(); ++v) {
        if (x[v] <= 0 || x[v] >= 1) return false;
        Rat rhs = x[v];
        for (int u : game.d.in(v)) rhs *= 1 - x[u];
        if (game.ratio(v) > rhs) return false;
    }
    return true;
}

int lll_satisfied(const Game& game, const std::vector<Rat>& x) {
    int sat = 0;
    for (int v = 0; v < game.n(); ++v) {
        if (x[v] <= 0 || x[v] >= 1) continue;
        Rat rhs = x[v];
        for (int u : game.d.in(v)) rhs *= 1 - x[u];
        if (game.ratio(v) <= rhs) ++sat;
    }
    return sat;
}

Rat lll_slack(const Game& game, const std::vector<Rat>& x) {
    Rat total = 0;
    for (int v = 0; v < game.n(); ++v) {
        Rat rhs = x[v];
        for (int u : game.d.in(v)) rhs *= 1 - x[u];
        total += rhs - game.ratio(v);
    }
    return total;
}

}  // namespace

LllResult lll_unwinnable_test(const Game& game, const std::vector<Rat>& x) {
    game.validate();
    if (static_cast<int>(x.size()) != game.n())
        throw std::invalid_argument("lll: weight vector size mismatch");
    for (const Rat& xi : x)
        if (xi <= 0 || xi >= 1)
            throw std::invalid_argument("lll: weights must lie strictly in (0,1)");
    return LllResult{lll_holds(game, x), x};
}

LllResult lll_unwinnable_test(const Game& game) {
    game.validate();
    if (game.n() == 0) return LllResult{false, {}};
    const int delta = game.d.max_in_degree();
    std::vector<Rat> x(game.n(), Rat(1, delta + 1));
    if (lll_holds(game, x)) return LllResult{true, std::move(x)};

    for (int pass = 0; pass < 20; ++pass) {
        bool improved = false;
        for (int v = 0; v < game.n(); ++v) {
            Rat best = x[v];
            int best_sat = lll_satisfied(game, x);
            Rat best_slack = lll_slack(game, x);
            for (int i = 1; i < 16; ++i) {
                x[v] = Rat(i, 16);
                const int sat = lll_satisfied(game, x);
                const Rat slack = lll_slack(game, x);
                if (sat > best_sat || (sat == best_sat && slack > best_slack)) {
                    best = x[v];
                    best_sat = sat;
                    best_slack = slack;
                }
            }
            if (x[v] != best) improved = true;
            x[v] = best;
            if (lll_holds(game, x)) return LllResult{true, std::move(x)};
        }
        if (!improved) break;
    }
    return LllResult{false, std::move(x)};
}

DegreeBounds degree_bounds(const Digraph& d) {
    DegreeBounds b;
    // Rational upper bound on e, accurate to 16 digits.
    const Rat e_up(Int("27182818284590453"), Int("10000000000000000"));
    b.directed = e_up * (d.max_in_degree() + 1);
    if (is_undirected(d)) {
        const int delta = d.max_out_degree();
        if (delta >= 2) {
            Rat num = 1, den = 1;
            for (int i = 0; i < delta; ++i) num *= delta;
            for (int i = 0; i < delta - 1; ++i) den *= delta - 1;
            b.undirected = num / den;
        }
    }
    return b;
}

Rat acyclicity_poly(const Digraph& d, const std::vector<Rat>& w,
                    const std::vector<bool>& s) {
    if (static_cast<int>(w.size()) != d.n() ||
        static_cast<int>(s.size()) != d.n())
        throw std::invalid_argument("acyclicity_poly: size mismatch");
    std::vector<int> members;
    for (int v = 0; v < d.n(); ++v)
        if (s[v]) members.push_back(v);
    if (members.size() > 24)
        throw std::invalid_argument("acyclicity_poly: support too large");
    Rat total = 0;
    for (std::uint32_t mask = 0; mask < (1u << members.size()); ++mask) {
        std::vector<int> t;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask & (1u << i)) t.push_back(members[i]);
        if (has_directed_cycle(induced_subgraph(d, t))) continue;
        Rat term = 1;
        for (int v : t) term *= -w[v];
        total += term;
    }
    return total;
}

ShearerReport shearer_counterexample(int k) {
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument(
            "shearer_counterexample: need an odd cycle length >= 3");
    Digraph d;
    for (int i = 0; i < k; ++i) d.add_vertex("v" + std::to_string(i));
    for (int i = 0; i < k; ++i) d.add_arc(i, (i + 1) % k);
    ShearerReport rep;
    rep.k = k;
    rep.game = make_game(std::move(d), std::vector<int>(k, 2),
                         std::vector<int>(k, 1));
    rep.strategy.plans.resize(k);
    for (int i = 0; i < k; ++i)
        rep.strategy.plans[i] = Plan{i, {(i + 1) % k}, {{0}, {1}}};
    rep.colorings = Int(1) << k;

    // Everyone wrong means c(v) != c(v+1) around an odd cycle: impossible.
    Int wrong = 0;
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    for (ColoringIter it(rep.game, all); it.valid(); it.advance()) {
        bool everyone_wrong = true;
        for (int i = 0; i < k && everyone_wrong; ++i)
            everyone_wrong = it.tuple()[i] != it.tuple()[(i + 1) % k];
        if (everyone_wrong) ++wrong;
    }
    rep.all_wrong = wrong;

    const Digraph dep = dual_dependency(rep.game.d);
    const std::vector<Rat> w(k, Rat(1, 2));
    rep.q_values.resize(std::size_t(1) << k);
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<bool> s(k, false);
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s[i] = true;
        rep.q_values[mask] = acyclicity_poly(dep, w, s);
    }
    return rep;
}

bool shearer_unwinnable_test(const Game& game) {
    game.validate();
    if (!is_undirected(game.d))
        throw std::invalid_argument("shearer_unwinnable_test: undirected only");
    if (game.n() > 20)
        throw std::invalid_argument("shearer_unwinnable_test: game too large");
    std::vector<Rat> r;
    for (int v = 0; v < game.n(); ++v) r.push_back(game.ratio(v));
    for (std::uint32_t mask = 0; mask < (1u << game.n()); ++mask) {
        std::vector<bool> s(game.n(), false);
        for (int i = 0; i < game.n(); ++i)
            if (mask & (1u << i)) s[i] = true;
        if (acyclicity_poly(game.d, r, s) <= 0) return false;
    }
    return true;
}

}  // namespace hg
