#include "hatgames/digraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hg {

int Digraph::add_vertex(const std::string& name) {
    if (index_of(name) >= 0) throw std::invalid_argument("duplicate vertex: " + name);
    names_.push_back(name);
    out_.emplace_back();
    in_.emplace_back();
    return n() - 1;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || u >= n() || v < 0 || v >= n()) throw std::out_of_range("arc endpoint");
    if (u == v) throw std::invalid_argument("loop arc on " + names_[u]);
    if (has_arc(u, v)) return;
    out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
    in_[v].insert(std::lower_bound(in_[v].begin(), in_[v].end(), u), u);
}

void Digraph::add_edge(int u, int v) {
    add_arc(u, v);
    add_arc(v, u);
}

int Digraph::index_of(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> a;
    for (int u = 0; u < n(); ++u)
        for (int v : out_[u]) a.emplace_back(u, v);
    return a;
}

int Digraph::arc_count() const {
    int c = 0;
    for (int u = 0; u < n(); ++u) c += static_cast<int>(out_[u].size());
    return c;
}

int Digraph::max_out_degree() const {
    int m = 0;
    for (int v = 0; v < n(); ++v) m = std::max(m, out_degree(v));
    return m;
}

int Digraph::max_in_degree() const {
    int m = 0;
    for (int v = 0; v < n(); ++v) m = std::max(m, in_degree(v));
    return m;
}

std::vector<std::vector<int>> strong_components(const Digraph& d) {
    // Tarjan, iterative-free (recursion fine at library scale).
    int n = d.n(), counter = 0;
    std::vector<int> index(n, -1), low(n, 0), comp_of(n, -1);
    std::vector<int> stack;
    std::vector<char> on_stack(n, 0);
    std::vector<std::vector<int>> comps;

    std::function<void(int)> visit = [&](int v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = 1;
        for (int w : d.out(v)) {
            if (index[w] < 0) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            std::vector<int> comp;
            int w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp_of[w] = static_cast<int>(comps.size());
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };
    for (int v = 0; v < n; ++v)
        if (index[v] < 0) visit(v);
    // Tarjan emits components in reverse topological order already
    // (a component is closed only after everything it reaches); keep as-is:
    // comps[i] has no arcs into comps[j] for j > i reversed. Verify direction:
    // arcs go from later-emitted to earlier-emitted components, so reverse to
    // put sources first.
    std::reverse(comps.begin(), comps.end());
    return comps;
}

Digraph induced_subgraph(const Digraph& d, const std::vector<int>& keep) {
    std::vector<int> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> map(d.n(), -1);
    Digraph s;
    for (int v : sorted) map[v] = s.add_vertex(d.name(v));
    for (int v : sorted)
        for (int w : d.out(v))
            if (map[w] >= 0) s.add_arc(map[v], map[w]);
    return s;
}

bool is_undirected(const Digraph& d) {
    for (auto [u, v] : d.arcs())
        if (!d.has_arc(v, u)) return false;
    return true;
}

bool is_complete(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v)
            if (u != v && !d.has_arc(u, v)) return false;
    return d.n() >= 1;
}

bool is_clique_subset(const Digraph& d, const std::vector<int>& s) {
    for (int u : s)
        for (int v : s)
            if (u != v && !d.has_arc(u, v)) return false;
    return true;
}

bool is_independent_subset(const Digraph& d, const std::vector<int>& s) {
    for (int u : s)
        for (int v : s)
            if (u != v && d.has_arc(u, v)) return false;
    return true;
}

bool is_directed_cycle(const Digraph& d, std::vector<int>* order) {
    int n = d.n();
    if (n < 2) return false;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != 1 || d.in_degree(v) != 1) return false;
    std::vector<int> seq{0};
    int cur = 0;
    for (int i = 1; i < n; ++i) {
        cur = d.out(cur)[0];
        if (cur == 0) return false;  // short cycle, not spanning
        seq.push_back(cur);
    }
    if (d.out(cur)[0] != 0) return false;
    // A 2-cycle is an undirected edge, not a directed cycle proper.
    if (n == 2) return false;
    if (order) *order = seq;
    return true;
}

bool is_undirected_cycle(const Digraph& d, std::vector<int>* order) {
    int n = d.n();
    if (n < 3 || !is_undirected(d)) return false;
    for (int v = 0; v < n; ++v)
        if (d.out_degree(v) != 2) return false;
    std::vector<int> seq{0};
    int prev = -1, cur = 0;
    for (int i = 1; i < n; ++i) {
        int nxt = d.out(cur)[0] == prev ? d.out(cur)[1] : d.out(cur)[0];
        if (nxt == 0) return false;
        prev = cur;
        cur = nxt;
        seq.push_back(cur);
    }
    if (d.out(cur)[0] != 0 && d.out(cur)[1] != 0) return false;
    if (order) *order = seq;
    return true;
}

bool is_forest(const Digraph& d) {
    if (!is_undirected(d)) return false;
    // Undirected acyclic: edge count = n - #components (via union-find).
    int n = d.n();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : d.arcs()) {
        if (u > v) continue;  // each edge once
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

bool has_directed_cycle(const Digraph& d) {
    for (const auto& comp : strong_components(d)) {
        if (comp.size() > 1) return true;
        int v = comp[0];
        if (d.has_arc(v, v)) return true;
    }
    return false;
}

bool is_star(const Digraph& d, int* center) {
    int n = d.n();
    if (n < 2 || !is_undirected(d)) return false;
    for (int c = 0; c < n; ++c) {
        if (d.out_degree(c) != n - 1) continue;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if (v != c && d.out_degree(v) != 1) ok = false;
        if (ok) {
            if (center) *center = c;
            return true;
        }
    }
    return false;
}

bool is_complete_bipartite(const Digraph& d, std::vector<int>* left,
                           std::vector<int>* right) {
    int n = d.n();
    if (n < 2 || !is_undirected(d) || d.arc_count() == 0) return false;
    std::vector<int> side(n, -1);
    // 2-color by BFS; fail on odd cycle or missing cross edges.
    for (int s = 0; s < n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w : d.out(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    return false;
                }
            }
        }
    }
    std::vector<int> l, r;
    for (int v = 0; v < n; ++v) (side[v] == 0 ? l : r).push_back(v);
    if (l.empty() || r.empty()) return false;
    for (int u : l)
        for (int v : r)
            if (!d.has_arc(u, v)) return false;
    if (left) *left = l;
    if (right) *right = r;
    return true;
}

std::vector<int> out_neighborhood(const Digraph& d, const std::vector<int>& s) {
    std::vector<char> in_s(d.n(), 0), seen(d.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> result;
    for (int v : s)
        for (int w : d.out(v))
            if (!in_s[w] && !seen[w]) {
                seen[w] = 1;
                result.push_back(w);
            }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace hg
