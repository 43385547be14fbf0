#pragma once

#include <stdexcept>
#include <string>

#include "hatgames/plan.hpp"

namespace hg {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error(msg + " at line " + std::to_string(line_) + ":" +
                             std::to_string(column_)),
          line(line_),
          column(column_) {}
};

// HGF: UTF-8, line-oriented, `#` comments, `;` separates statements.
//   vertex NAME h=INT [g=INT]   (g defaults to 1)
//   arc U V                     (U sees V)
//   edge U V                    (both arcs)
// Declaration order is the canonical order.
Game parse_game(const std::string& text);
std::string print_game(const Game& game);

// Strategy file: per vertex a header `plan V order=U1,U2,...` followed by one
// line per input tuple in row-major order: `c1 c2 ... -> g1,g2,...`.
Strategy parse_strategy(const std::string& text, const Game& game);
std::string print_strategy(const Game& game, const Strategy& f);

}  // namespace hg
