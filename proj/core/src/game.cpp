#include "hatgames/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace hg {

bool Game::is_latvian() const {
    return std::all_of(g.begin(), g.end(), [](int x) { return x == 1; });
}

bool Game::is_polish() const {
    if (n() == 0) return true;
    for (int v = 0; v < n(); ++v)
        if (h[v] != h[0] || g[v] != g[0]) return false;
    return true;
}

void Game::validate() const {
    if (static_cast<int>(h.size()) != n() || static_cast<int>(g.size()) != n())
        throw std::invalid_argument("hatness/guessness size mismatch");
    for (int v = 0; v < n(); ++v) {
        if (g[v] < 1)
            throw std::invalid_argument("guessness must be >= 1 at " + d.name(v));
        if (h[v] <= g[v])
            throw std::invalid_argument("guessness must be < hatness at " + d.name(v));
    }
}

Game make_game(Digraph d, std::vector<int> h, std::vector<int> g) {
    if (g.empty()) g.assign(d.n(), 1);
    Game game{std::move(d), std::move(h), std::move(g)};
    game.validate();
    return game;
}

Game restrict_game(const Game& game, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    Game out;
    out.d = induced_subgraph(game.d, sorted);
    for (int v : sorted) {
        out.h.push_back(game.h[v]);
        out.g.push_back(game.g[v]);
    }
    return out;
}

Int coloring_count(const Game& game, const std::vector<int>& over) {
    Int c = 1;
    for (int v : over) c *= game.h[v];
    return c;
}

Int coloring_count(const Game& game) {
    Int c = 1;
    for (int v = 0; v < game.n(); ++v) c *= game.h[v];
    return c;
}

ColoringIter::ColoringIter(const Game& game, std::vector<int> over)
    : game_(&game), over_(std::move(over)), tuple_(over_.size(), 0) {}

void ColoringIter::advance() {
    for (int i = static_cast<int>(tuple_.size()) - 1; i >= 0; --i) {
        if (++tuple_[i] < game_->h[over_[i]]) return;
        tuple_[i] = 0;
    }
    valid_ = false;
}

PartialColoring ColoringIter::partial(int n) const {
    PartialColoring pc = PartialColoring::empty(n);
    for (size_t i = 0; i < over_.size(); ++i) pc.set(over_[i], tuple_[i]);
    return pc;
}

}  // namespace hg
