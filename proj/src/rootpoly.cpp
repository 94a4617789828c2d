#include "pd/rootpoly.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace pd {

namespace {

bool arcs_cross(const Edge& e, const Edge& f) {
    auto [a, b] = e;
    auto [c, d] = f;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool crosses_any(const Edge& e, const std::vector<Edge>& chosen) {
    for (const auto& f : chosen)
        if (arcs_cross(e, f)) return true;
    return false;
}

int dsu_find(std::vector<int>& p, int v) {
    while (p[v] != v) v = p[v] = p[p[v]];
    return v;
}

// Depth-first enumeration of the noncrossing alternating acyclic subsets of
// `edges`.  All three conditions are hereditary, so partial subsets prune.
void forest_dfs(const std::vector<Edge>& edges, std::size_t idx,
                std::vector<Edge>& chosen, std::vector<int> parent,
                std::vector<char>& has_in, std::vector<char>& has_out,
                bool trees_only, int m, std::vector<std::set<Edge>>& out) {
    std::size_t want = static_cast<std::size_t>(m) - 1;
    if (trees_only && chosen.size() + (edges.size() - idx) < want) return;
    if (idx == edges.size()) {
        if (!trees_only || chosen.size() == want)
            out.emplace_back(chosen.begin(), chosen.end());
        return;
    }
    const auto [i, j] = edges[idx];
    if (!has_in[i] && !has_out[j] && !crosses_any(edges[idx], chosen)) {
        std::vector<int> p2 = parent;
        int ri = dsu_find(p2, i), rj = dsu_find(p2, j);
        if (ri != rj) {
            p2[ri] = rj;
            bool oi = has_out[i], ij = has_in[j];
            has_out[i] = true;
            has_in[j] = true;
            chosen.push_back(edges[idx]);
            forest_dfs(edges, idx + 1, chosen, std::move(p2), has_in, has_out,
                       trees_only, m, out);
            chosen.pop_back();
            has_out[i] = oi;
            has_in[j] = ij;
        }
    }
    forest_dfs(edges, idx + 1, chosen, std::move(parent), has_in, has_out,
               trees_only, m, out);
}

std::vector<std::set<Edge>> noncrossing_alternating_subsets(
    const DirectedGraph& g, bool trees_only) {
    std::vector<Edge> edges(g.edges.begin(), g.edges.end());
    std::vector<Edge> chosen;
    std::vector<int> parent(g.m + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<char> has_in(g.m + 1, 0), has_out(g.m + 1, 0);
    std::vector<std::set<Edge>> out;
    forest_dfs(edges, 0, chosen, std::move(parent), has_in, has_out,
               trees_only, g.m, out);
    std::sort(out.begin(), out.end());
    return out;
}

// One leaf-peeling step: `vertex` has `edge` as its only remaining edge.
struct PeelStep {
    std::size_t edge = 0;
    int vertex = 0;
    int other = 0;
    bool vertex_is_source = false;
};

// Peeling order of a forest given as a sorted edge list; peels every edge.
std::vector<PeelStep> peel_order(const std::vector<Edge>& edges, int m) {
    std::vector<int> degree(m + 1, 0);
    for (const auto& [i, j] : edges) {
        ++degree[i];
        ++degree[j];
    }
    std::vector<char> used(edges.size(), 0);
    std::vector<PeelStep> steps;
    std::vector<int> queue;
    for (int v = 1; v <= m; ++v)
        if (degree[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (degree[v] != 1) continue;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (used[e]) continue;
            const auto [i, j] = edges[e];
            if (i != v && j != v) continue;
            int other = i == v ? j : i;
            steps.push_back({e, v, other, i == v});
            used[e] = 1;
            --degree[v];
            --degree[other];
            if (degree[other] == 1) queue.push_back(other);
            break;
        }
    }
    assert(steps.size() == edges.size());
    return steps;
}

// Replays a peeling order on the value vector x, writing the edge-basis
// coefficients into c (aligned with the peeled edge list).  x is consumed.
void peel_solve(const std::vector<PeelStep>& steps, std::vector<long long>& x,
                std::vector<long long>& c) {
    for (const auto& s : steps) {
        long long v = x[s.vertex];
        c[s.edge] = s.vertex_is_source ? v : -v;
        x[s.other] += v;
        x[s.vertex] = 0;
    }
}

}  // namespace

DirectedGraph transitive_closure(const DirectedGraph& g) {
    std::vector<std::vector<int>> succ(g.m + 1);
    for (const auto& [i, j] : g.edges) succ[i].push_back(j);
    DirectedGraph out{g.m, {}};
    // edges ascend, so a reverse sweep sees every successor's closure first
    std::vector<std::set<int>> reach(g.m + 1);
    for (int v = g.m; v >= 1; --v) {
        for (int nxt : succ[v]) {
            reach[v].insert(nxt);
            reach[v].insert(reach[nxt].begin(), reach[nxt].end());
        }
        for (int to : reach[v]) out.edges.insert({v, to});
    }
    return out;
}

bool is_noncrossing(const std::set<Edge>& edges) {
    for (auto it = edges.begin(); it != edges.end(); ++it)
        for (auto jt = std::next(it); jt != edges.end(); ++jt)
            if (arcs_cross(*it, *jt)) return false;
    return true;
}

bool is_alternating(const std::set<Edge>& edges) {
    std::set<int> in, out;
    for (const auto& [i, j] : edges) {
        out.insert(i);
        in.insert(j);
    }
    for (int v : in)
        if (out.count(v)) return false;
    return true;
}

std::vector<LabeledTree> noncrossing_alternating_spanning_trees(
    const DirectedGraph& closed) {
    std::vector<LabeledTree> out;
    for (auto& edges : noncrossing_alternating_subsets(closed, true)) {
        LabeledTree t{closed.m, std::move(edges)};
        assert(is_spanning_tree(t));
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<DirectedGraph> noncrossing_alternating_spanning_forests(
    const DirectedGraph& closed, const std::vector<PcConstraint>& constraints) {
    std::vector<DirectedGraph> out;
    for (auto& edges : noncrossing_alternating_subsets(closed, false)) {
        bool ok = true;
        for (const auto& pc : constraints) {
            // a component that is both left and right imposes both demands
            bool hit_right = !pc.right, hit_left = !pc.left;
            for (const auto& [a, b] : edges) {
                if (b == pc.hi && a <= pc.lo) hit_right = true;
                if (a == pc.lo && b >= pc.hi) hit_left = true;
            }
            if (!hit_right || !hit_left) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back({closed.m, std::move(edges)});
    }
    return out;
}

Triangulation canonical_triangulation(const DirectedGraph& tree) {
    if (!is_spanning_tree(tree))
        throw std::invalid_argument("canonical triangulation needs a spanning tree");
    return {tree.m, noncrossing_alternating_spanning_trees(transitive_closure(tree))};
}

std::set<Edge> dream_edge_set(const Permutation& w, const PipeDream& d) {
    BoundaryLabeling bl = boundary_labels(w);
    std::set<Cell> reg = region(w);
    for (const auto& c : d.crosses)
        if (!reg.count(c))
            throw std::invalid_argument("dream does not fit inside the region");
    std::set<Edge> out;
    for (const auto& box : reg)
        if (!d.crosses.count(box)) out.insert(box_label(bl, box));
    out.insert({1, bl.m});  // box (1,1) is never crossed, so usually redundant
    return out;
}

std::vector<std::pair<PipeDream, LabeledTree>> map_M(const Permutation& w) {
    BoundaryLabeling bl = boundary_labels(w);
    std::vector<std::pair<PipeDream, LabeledTree>> out;
    for (const auto& d : enumerate_reduced(w))
        out.emplace_back(d, make_tree(bl.m, dream_edge_set(w, d)));
    return out;
}

bool simplex_is_unimodular(const LabeledTree& t) {
    if (!is_spanning_tree(t))
        throw std::invalid_argument("unimodularity check needs a spanning tree");
    int d = t.m - 1;
    // rows: edge vectors e_i - e_j restricted to coordinates 1..m-1
    std::vector<std::vector<long long>> a(d, std::vector<long long>(d, 0));
    int r = 0;
    for (const auto& [i, j] : t.edges) {
        if (i < t.m) a[r][i - 1] = 1;
        if (j < t.m) a[r][j - 1] = -1;
        ++r;
    }
    // Bareiss fraction-free elimination keeps everything integral
    long long prev = 1;
    for (int k = 0; k < d; ++k) {
        if (a[k][k] == 0) {
            int swap_row = -1;
            for (int rr = k + 1; rr < d; ++rr)
                if (a[rr][k] != 0) {
                    swap_row = rr;
                    break;
                }
            if (swap_row < 0) return false;  // singular
            std::swap(a[k], a[swap_row]);
            for (auto& x : a[k]) x = -x;
        }
        for (int rr = k + 1; rr < d; ++rr)
            for (int cc = k + 1; cc < d; ++cc)
                a[rr][cc] = (a[rr][cc] * a[k][k] - a[rr][k] * a[k][cc]) / prev;
        prev = a[k][k];
    }
    return d == 0 || std::llabs(a[d - 1][d - 1]) == 1;
}

long long normalized_volume(const DirectedGraph& tree) {
    return static_cast<long long>(canonical_triangulation(tree).simplices.size());
}

long long normalized_volume(const Permutation& w) {
    return normalized_volume(tree(w));
}

std::vector<long long> tree_basis_coefficients(const LabeledTree& t,
                                               const std::vector<long long>& x) {
    if (!is_spanning_tree(t))
        throw std::invalid_argument("edge basis needs a spanning tree");
    if (x.size() != static_cast<std::size_t>(t.m) + 1)
        throw std::invalid_argument("value vector must cover vertices 1..m");
    assert(std::accumulate(x.begin() + 1, x.end(), 0LL) == 0);
    std::vector<Edge> edges(t.edges.begin(), t.edges.end());
    std::vector<long long> vals = x;
    std::vector<long long> c(edges.size(), 0);
    peel_solve(peel_order(edges, t.m), vals, c);
    return c;
}

bool simplex_contains(const LabeledTree& t, const std::vector<long long>& x,
                      long long s, bool open) {
    std::vector<long long> c = tree_basis_coefficients(t, x);
    long long total = 0;
    for (long long v : c) {
        if (open ? v <= 0 : v < 0) return false;
        total += v;
    }
    return open ? total < s : total <= s;
}

long long ehrhart_count(const DirectedGraph& g, long long t, int max_m) {
    for (const auto& [a, b] : g.edges)
        if (!(1 <= a && a < b && b <= g.m))
            throw std::invalid_argument("ehrhart counting needs ascending edges on 1..m");
    if (g.m > max_m)
        throw std::invalid_argument("ehrhart brute force capped; raise max_m to override");
    if (t < 0) throw std::invalid_argument("dilation must be nonnegative");
    if (t == 0 || g.edges.empty()) return 1;
    if (t > 120) throw std::invalid_argument("dilation too large for brute-force counting");

    // Lattice points of t*P(G) are exactly the divergences of nonnegative
    // integer vectors c on the closure edges with sum(c) <= t: any real
    // witness decomposes into source-to-sink paths on the DAG, each path
    // collapses to a single closure edge by transitivity, and transportation
    // integrality makes the collapsed witness integral.  Valid for crossing
    // graphs too, where simplex counting over noncrossing trees is not.
    DirectedGraph closure = transitive_closure(g);
    std::vector<Edge> edges(closure.edges.begin(), closure.edges.end());
    double leaves = 1.0;
    for (long long i = 1; i <= t; ++i)
        leaves *= static_cast<double>(edges.size() + i) / static_cast<double>(i);
    if (leaves > 2e8)
        throw std::invalid_argument("dilation too large for brute-force counting");

    std::vector<int> x(g.m + 1, 0);
    std::unordered_set<std::uint64_t> packed;  // one byte per coordinate
    std::set<std::vector<int>> wide;           // fallback beyond 8 vertices
    bool pack = g.m <= 8;
    std::function<void(std::size_t, long long)> sweep = [&](std::size_t idx,
                                                            long long budget) {
        if (idx == edges.size()) {
            if (pack) {
                std::uint64_t key = 0;
                for (int i = 1; i <= g.m; ++i)
                    key = key << 8 | static_cast<std::uint64_t>(x[i] + 128);
                packed.insert(key);
            } else {
                wide.insert(x);
            }
            return;
        }
        const auto [a, b] = edges[idx];
        for (long long c = 0; c <= budget; ++c) {
            if (c > 0) {
                ++x[a];
                --x[b];
            }
            sweep(idx + 1, budget - c);
        }
        x[a] -= static_cast<int>(budget);
        x[b] += static_cast<int>(budget);
    };
    sweep(0, t);
    return static_cast<long long>(pack ? packed.size() : wide.size());
}

std::array<DirectedGraph, 3> reduction_step_graphs(const DirectedGraph& g0,
                                                   int i, int j, int k) {
    if (!(i < j && j < k) || !g0.edges.count({i, j}) || !g0.edges.count({j, k}))
        throw std::invalid_argument("reduction needs edges (i,j) and (j,k) with i<j<k");
    DirectedGraph g1 = g0, g2 = g0, g3 = g0;
    g1.edges.erase({j, k});
    g2.edges.erase({i, j});
    g3.edges.erase({i, j});
    g3.edges.erase({j, k});
    for (auto* g : {&g1, &g2, &g3}) g->edges.insert({i, k});
    return {g1, g2, g3};
}

std::optional<Edge> interior_vertex_of_tree(const DirectedGraph& tree) {
    if (!is_spanning_tree(tree))
        throw std::invalid_argument("interior vertex is defined for spanning trees");
    std::optional<Edge> found;
    std::vector<long long> x(tree.m + 1, 0);
    for (const auto& [k, l] : transitive_closure(tree).edges) {
        x.assign(tree.m + 1, 0);
        x[k] = 1;
        x[l] = -1;
        // positive closure combinations exist iff the tree-basis solution is
        // strictly positive: closure edges expand into their tree paths
        bool interior = true;
        for (long long c : tree_basis_coefficients(tree, x))
            if (c <= 0) {
                interior = false;
                break;
            }
        if (interior) {
            assert(!found);
            found = Edge{k, l};
#ifdef NDEBUG
            break;
#endif
        }
    }
    return found;
}

std::optional<Edge> interior_vertex(const Permutation& w) {
    return interior_vertex_of_tree(tree(w));
}

SimplicialComplex triangulation_complex(const DirectedGraph& tree) {
    DirectedGraph closed = transitive_closure(tree);
    Triangulation tri = canonical_triangulation(tree);
    std::vector<Cell> verts(closed.edges.begin(), closed.edges.end());
    std::vector<std::vector<Cell>> facets;
    for (const auto& s : tri.simplices)
        facets.emplace_back(s.edges.begin(), s.edges.end());
    return SimplicialComplex(verts, facets);
}

SimplicialComplex vertex_figure_complex(const Permutation& w) {
    return triangulation_complex(tree(w));
}

}  // namespace pd
