#include "hatgames/hgf.hpp"

#include <algorithm>
#include <sstream>

namespace hg {

namespace {

struct Statement {
    std::vector<std::string> tokens;
    int line;
};

std::vector<Statement> tokenize(const std::string& text) {
    std::vector<Statement> stmts;
    int line = 1;
    Statement cur{{}, 1};
    std::string tok;
    auto flush_tok = [&] {
        if (!tok.empty()) {
            if (cur.tokens.empty()) cur.line = line;
            cur.tokens.push_back(tok);
            tok.clear();
        }
    };
    auto flush_stmt = [&] {
        flush_tok();
        if (!cur.tokens.empty()) stmts.push_back(cur);
        cur.tokens.clear();
    };
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            --i;
        } else if (c == '\n') {
            flush_stmt();
            ++line;
        } else if (c == ';') {
            flush_stmt();
        } else if (c == ' ' || c == '\t' || c == '\r') {
            flush_tok();
        } else {
            tok.push_back(c);
        }
    }
    flush_stmt();
    return stmts;
}

int parse_int(const std::string& s, int line) {
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(s, &pos);
    } catch (...) {
        throw ParseError("expected integer, got '" + s + "'", line, 1);
    }
    if (pos != s.size()) throw ParseError("expected integer, got '" + s + "'", line, 1);
    return v;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    return parts;
}

}  // namespace

Game parse_game(const std::string& text) {
    Game game;
    for (const Statement& st : tokenize(text)) {
        const auto& t = st.tokens;
        if (t[0] == "vertex") {
            if (t.size() < 3) throw ParseError("vertex NAME h=INT [g=INT]", st.line, 1);
            if (game.d.index_of(t[1]) >= 0)
                throw ParseError("duplicate vertex '" + t[1] + "'", st.line, 1);
            int h = -1, g = 1;
            for (size_t i = 2; i < t.size(); ++i) {
                if (t[i].rfind("h=", 0) == 0)
                    h = parse_int(t[i].substr(2), st.line);
                else if (t[i].rfind("g=", 0) == 0)
                    g = parse_int(t[i].substr(2), st.line);
                else
                    throw ParseError("unknown vertex attribute '" + t[i] + "'", st.line, 1);
            }
            if (h < 2) throw ParseError("hatness must be >= 2 for '" + t[1] + "'", st.line, 1);
            if (g < 1) throw ParseError("guessness must be >= 1 for '" + t[1] + "'", st.line, 1);
            if (g >= h)
                throw ParseError("guessness must be < hatness for '" + t[1] + "'", st.line, 1);
            game.d.add_vertex(t[1]);
            game.h.push_back(h);
            game.g.push_back(g);
        } else if (t[0] == "arc" || t[0] == "edge") {
            if (t.size() != 3) throw ParseError(t[0] + " U V", st.line, 1);
            int u = game.d.index_of(t[1]), v = game.d.index_of(t[2]);
            if (u < 0) throw ParseError("unknown vertex '" + t[1] + "'", st.line, 1);
            if (v < 0) throw ParseError("unknown vertex '" + t[2] + "'", st.line, 1);
            if (u == v) throw ParseError("loop on '" + t[1] + "'", st.line, 1);
            if (t[0] == "arc")
                game.d.add_arc(u, v);
            else
                game.d.add_edge(u, v);
        } else {
            throw ParseError("unknown statement '" + t[0] + "'", st.line, 1);
        }
    }
    game.validate();
    return game;
}

std::string print_game(const Game& game) {
    std::ostringstream os;
    for (int v = 0; v < game.n(); ++v) {
        os << "vertex " << game.d.name(v) << " h=" << game.h[v];
        if (game.g[v] != 1) os << " g=" << game.g[v];
        os << "\n";
    }
    // Reciprocal arc pairs print as edges.
    for (auto [u, v] : game.d.arcs()) {
        if (game.d.has_arc(v, u)) {
            if (u < v) os << "edge " << game.d.name(u) << " " << game.d.name(v) << "\n";
        } else {
            os << "arc " << game.d.name(u) << " " << game.d.name(v) << "\n";
        }
    }
    return os.str();
}

Strategy parse_strategy(const std::string& text, const Game& game) {
    Strategy f;
    f.plans.resize(game.n());
    std::vector<char> seen(game.n(), 0);
    Plan* cur = nullptr;
    long long expected_rows = 0;

    for (const Statement& st : tokenize(text)) {
        const auto& t = st.tokens;
        if (t[0] == "plan") {
            if (cur && static_cast<long long>(cur->table.size()) != expected_rows)
                throw ParseError("plan row count mismatch", st.line, 1);
            if (t.size() != 3 || t[2].rfind("order=", 0) != 0)
                throw ParseError("plan V order=U1,U2,...", st.line, 1);
            int v = game.d.index_of(t[1]);
            if (v < 0) throw ParseError("unknown vertex '" + t[1] + "'", st.line, 1);
            if (seen[v]) throw ParseError("duplicate plan for '" + t[1] + "'", st.line, 1);
            seen[v] = 1;
            cur = &f.plans[v];
            cur->vertex = v;
            for (const std::string& name : split_commas(t[2].substr(6))) {
                int u = game.d.index_of(name);
                if (u < 0) throw ParseError("unknown vertex '" + name + "'", st.line, 1);
                cur->order.push_back(u);
            }
            std::vector<int> sorted = cur->order;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != game.d.out(v))
                throw ParseError("order is not the out-neighborhood of '" + t[1] + "'",
                                 st.line, 1);
            expected_rows = table_size(game, cur->order);
        } else {
            if (!cur) throw ParseError("row before any plan header", st.line, 1);
            auto arrow = std::find(t.begin(), t.end(), "->");
            if (arrow == t.end() || arrow + 2 != t.end())
                throw ParseError("row: c1 c2 ... -> g1,g2,...", st.line, 1);
            if (static_cast<size_t>(arrow - t.begin()) != cur->order.size())
                throw ParseError("row input arity mismatch", st.line, 1);
            // Rows must arrive in row-major order; inputs are redundant but checked.
            long long idx = 0;
            for (size_t i = 0; i < cur->order.size(); ++i) {
                int c = parse_int(t[i], st.line);
                int hu = game.h[cur->order[i]];
                if (c < 0 || c >= hu) throw ParseError("input color out of range", st.line, 1);
                idx = idx * hu + c;
            }
            if (idx != static_cast<long long>(cur->table.size()))
                throw ParseError("rows out of row-major order", st.line, 1);
            std::vector<int> row;
            for (const std::string& s : split_commas(t.back()))
                row.push_back(parse_int(s, st.line));
            std::sort(row.begin(), row.end());
            cur->table.push_back(std::move(row));
        }
    }
    for (int v = 0; v < game.n(); ++v)
        if (!seen[v])
            throw ParseError("missing plan for '" + game.d.name(v) + "'", 1, 1);
    validate_strategy(game, f);
    return f;
}

std::string print_strategy(const Game& game, const Strategy& f) {
    std::ostringstream os;
    for (int v = 0; v < game.n(); ++v) {
        const Plan& p = f.plans[v];
        os << "plan " << game.d.name(v) << " order=";
        for (size_t i = 0; i < p.order.size(); ++i)
            os << (i ? "," : "") << game.d.name(p.order[i]);
        os << "\n";
        std::vector<int> t(p.order.size(), 0);
        for (const auto& row : p.table) {
            for (size_t i = 0; i < t.size(); ++i) os << t[i] << " ";
            os << "->";
            for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : " ") << row[i];
            os << "\n";
            for (int i = static_cast<int>(t.size()) - 1; i >= 0; --i) {
                if (++t[i] < game.h[p.order[i]]) break;
                t[i] = 0;
            }
        }
    }
    return os.str();
}

}  // namespace hg
