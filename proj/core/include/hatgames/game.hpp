#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hatgames/digraph.hpp"

namespace hg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Hat game: each sage v gets one of h(v) colors and announces g(v) guesses
// computed from the colors she sees (her out-neighborhood). The sages win a
// coloring when at least one of them includes her own color among her
// guesses. Standing assumption: h(v) > g(v) > 0.
struct Game {
    Digraph d;
    std::vector<int> h;
    std::vector<int> g;

    int n() const { return d.n(); }
    Rat ratio(int v) const { return Rat(g[v], h[v]); }
    bool is_latvian() const;
    bool is_polish() const;
    bool is_classic() const { return is_latvian() && is_polish(); }

    // Throws std::invalid_argument naming the offending vertex.
    void validate() const;
};

Game make_game(Digraph d, std::vector<int> h, std::vector<int> g = {});
Game restrict_game(const Game& game, const std::vector<int>& keep);

// Number of colorings of `over` (all vertices by default): prod h(v).
Int coloring_count(const Game& game, const std::vector<int>& over);
Int coloring_count(const Game& game);

// Full coloring: color per vertex, canonical order.
using Coloring = std::vector<int>;

// Partial coloring with explicit domain.
struct PartialColoring {
    std::vector<int> value;   // size n; meaningful only where assigned
    std::vector<char> domain; // size n; 1 = assigned

    static PartialColoring empty(int n) {
        return PartialColoring{std::vector<int>(n, 0), std::vector<char>(n, 0)};
    }
    void set(int v, int c) {
        value[v] = c;
        domain[v] = 1;
    }
    bool assigned(int v) const { return domain[v] != 0; }
    bool operator==(const PartialColoring& o) const = default;
};

// Row-major odometer over the hat space of `over` in canonical order (the
// first listed vertex varies slowest). Yields prod h(v) tuples; the empty
// set yields exactly one empty tuple.
class ColoringIter {
public:
    ColoringIter(const Game& game, std::vector<int> over);
    bool valid() const { return valid_; }
    void advance();
    const std::vector<int>& tuple() const { return tuple_; }  // parallel to over
    const std::vector<int>& over() const { return over_; }
    PartialColoring partial(int n) const;

private:
    const Game* game_;
    std::vector<int> over_;
    std::vector<int> tuple_;
    bool valid_ = true;
};

}  // namespace hg
