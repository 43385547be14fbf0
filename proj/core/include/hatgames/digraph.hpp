#pragma once

#include <string>
#include <vector>

namespace hg {

// Directed graph with named vertices. Vertex order is declaration order and
// is canonical: every row-major table in the library derives from it.
// An arc (u, v) means "u sees v".
class Digraph {
public:
    int add_vertex(const std::string& name);
    void add_arc(int u, int v);
    void add_edge(int u, int v);

    int n() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& name) const;  // -1 if absent

    bool has_arc(int u, int v) const;
    const std::vector<int>& out(int v) const { return out_[v]; }
    const std::vector<int>& in(int v) const { return in_[v]; }
    std::vector<std::pair<int, int>> arcs() const;
    int arc_count() const;

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    int max_out_degree() const;
    int max_in_degree() const;

    bool operator==(const Digraph& o) const = default;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

// Components in a topological order of the condensation: components with no
// out-arcs to later-listed components appear last. Vertices inside a
// component keep canonical order.
std::vector<std::vector<int>> strong_components(const Digraph& d);

// Induced subgraph on `keep` (canonical order preserved).
Digraph induced_subgraph(const Digraph& d, const std::vector<int>& keep);

bool is_undirected(const Digraph& d);
bool is_complete(const Digraph& d);              // undirected clique, n >= 1
bool is_clique_subset(const Digraph& d, const std::vector<int>& s);
bool is_independent_subset(const Digraph& d, const std::vector<int>& s);
bool is_directed_cycle(const Digraph& d, std::vector<int>* order = nullptr);
bool is_undirected_cycle(const Digraph& d, std::vector<int>* order = nullptr);
bool is_forest(const Digraph& d);                // undirected and acyclic
bool has_directed_cycle(const Digraph& d);
// Star: undirected, one center adjacent to all leaves, leaves pairwise
// non-adjacent, >= 1 leaf. Returns center via out param.
bool is_star(const Digraph& d, int* center = nullptr);
bool is_complete_bipartite(const Digraph& d, std::vector<int>* left = nullptr,
                           std::vector<int>* right = nullptr);

// Out-neighborhood of a set: union of N+(v) for v in s, minus s itself.
std::vector<int> out_neighborhood(const Digraph& d, const std::vector<int>& s);

}  // namespace hg
