#pragma once

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace pd {

// Directed edge (i,j); every graph in this library keeps i < j.
using Edge = std::pair<int, int>;

// Graph on vertices 1..m with ascending edges.
struct DirectedGraph {
    int m = 1;
    std::set<Edge> edges;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
    friend bool operator<(const DirectedGraph& a, const DirectedGraph& b) {
        return std::tie(a.m, a.edges) < std::tie(b.m, b.edges);
    }
};

// A DirectedGraph that happens to be a spanning tree.
using LabeledTree = DirectedGraph;

inline DirectedGraph make_graph(int m, std::set<Edge> edges) {
    if (m < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (const auto& [i, j] : edges)
        if (i < 1 || j <= i || j > m)
            throw std::invalid_argument("edge endpoints must satisfy 1 <= i < j <= m");
    return DirectedGraph{m, std::move(edges)};
}

// Connected components (ignoring edge direction), each sorted, ordered by
// smallest vertex.  Isolated vertices form their own components.
inline std::vector<std::vector<int>> components(const DirectedGraph& g) {
    std::vector<int> parent(g.m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [i, j] : g.edges) parent[find(i)] = find(j);
    std::vector<std::vector<int>> comp;
    std::vector<int> where(g.m + 1, -1);
    for (int v = 1; v <= g.m; ++v) {
        int root = find(v);
        if (where[root] < 0) {
            where[root] = static_cast<int>(comp.size());
            comp.emplace_back();
        }
        comp[where[root]].push_back(v);
    }
    return comp;
}

inline bool is_forest(const DirectedGraph& g) {
    return g.edges.size() + components(g).size() == static_cast<std::size_t>(g.m);
}

inline bool is_spanning_tree(const DirectedGraph& g) {
    return is_forest(g) && components(g).size() == 1;
}

inline LabeledTree make_tree(int m, std::set<Edge> edges) {
    DirectedGraph g = make_graph(m, std::move(edges));
    if (!is_spanning_tree(g)) throw std::invalid_argument("not a spanning tree");
    return g;
}

}  // namespace pd
