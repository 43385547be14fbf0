#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hatgames/game.hpp"

namespace helpers {

inline hg::Digraph named_vertices(int n) {
    hg::Digraph d;
    for (int i = 0; i < n; ++i) d.add_vertex("v" + std::to_string(i));
    return d;
}

inline hg::Game clique_game(std::vector<int> h, std::vector<int> g) {
    hg::Digraph d = named_vertices(static_cast<int>(h.size()));
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j) d.add_edge(i, j);
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

inline hg::Game dir_cycle_game(std::vector<int> h, std::vector<int> g) {
    const int n = static_cast<int>(h.size());
    hg::Digraph d = named_vertices(n);
    for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

inline hg::Game undir_cycle_game(std::vector<int> h, std::vector<int> g) {
    const int n = static_cast<int>(h.size());
    hg::Digraph d = named_vertices(n);
    for (int i = 0; i < n; ++i) d.add_edge(i, (i + 1) % n);
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

inline hg::Game path_game(std::vector<int> h, std::vector<int> g) {
    const int n = static_cast<int>(h.size());
    hg::Digraph d = named_vertices(n);
    for (int i = 0; i + 1 < n; ++i) d.add_edge(i, i + 1);
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

// Leaves listed as (hatness, guessness); the center comes first.
inline hg::Game star_game(int ch, int cg,
                          const std::vector<std::pair<int, int>>& leaves) {
    hg::Digraph d = named_vertices(1 + static_cast<int>(leaves.size()));
    std::vector<int> h{ch}, g{cg};
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        d.add_edge(0, static_cast<int>(i) + 1);
        h.push_back(leaves[i].first);
        g.push_back(leaves[i].second);
    }
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

inline hg::Game tree_game(const std::vector<int>& parent, std::vector<int> h,
                          std::vector<int> g) {
    hg::Digraph d = named_vertices(static_cast<int>(h.size()));
    for (int i = 1; i < d.n(); ++i) d.add_edge(i, parent[i]);
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

// Random labelled tree on n vertices: each vertex attaches to an earlier one.
inline std::vector<int> random_parents(int n, std::mt19937& rng) {
    std::vector<int> parent(n, 0);
    for (int i = 1; i < n; ++i)
        parent[i] = static_cast<int>(rng() % static_cast<unsigned>(i));
    return parent;
}

inline hg::Game random_game(int max_n, int max_h, std::mt19937& rng,
                            bool undirected = false) {
    const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
    hg::Digraph d = named_vertices(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || (undirected && j < i)) continue;
            if (rng() % 2 == 0) continue;
            if (undirected)
                d.add_edge(i, j);
            else
                d.add_arc(i, j);
        }
    std::vector<int> h(n), g(n);
    for (int i = 0; i < n; ++i) {
        h[i] = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_h - 1));
        g[i] = 1 + static_cast<int>(rng() % static_cast<unsigned>(h[i] - 1));
    }
    return hg::make_game(std::move(d), std::move(h), std::move(g));
}

}  // namespace helpers
