#pragma once

#include "pd/graphs.hpp"
#include "pd/permutation.hpp"
#include "pd/pipedream.hpp"
#include "pd/simplicial.hpp"
#include "pd/treebuild.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace pd {

// Directed transitive closure: (i,j) present iff a directed path i -> j
// exists.  Vertex count is preserved.
DirectedGraph transitive_closure(const DirectedGraph& g);

// No two arcs (a,c),(b,d) with a < b < c < d when the vertices are drawn on a
// line in increasing order.  Shared endpoints never cross.
bool is_noncrossing(const std::set<Edge>& edges);

// No vertex with both an incoming and an outgoing edge.
bool is_alternating(const std::set<Edge>& edges);

// All spanning trees of `closed` that are noncrossing and alternating,
// sorted.  The input is expected to be transitively closed; the enumeration
// itself does not depend on that.
std::vector<LabeledTree> noncrossing_alternating_spanning_trees(
    const DirectedGraph& closed);

// Incidence requirement contributed by one pseudo-component on [lo, hi]:
// a right component demands an edge (a, hi) with a <= lo, a left component
// an edge (lo, b) with b >= hi.
struct PcConstraint {
    int lo = 0, hi = 0;
    bool left = false, right = false;
};

// All noncrossing alternating forests of `closed` (any number of edges,
// isolated vertices allowed) meeting every constraint, sorted.
std::vector<DirectedGraph> noncrossing_alternating_spanning_forests(
    const DirectedGraph& closed, const std::vector<PcConstraint>& constraints);

struct Triangulation {
    int m = 1;
    std::vector<LabeledTree> simplices;
};

// The simplices conv(0, e_i - e_j) of the noncrossing alternating spanning
// trees of the transitive closure.  Requires a spanning tree.
Triangulation canonical_triangulation(const DirectedGraph& tree);

// Labels of the region boxes left uncrossed by the dream, plus the long edge
// (1,m).  The dream's crosses must lie inside the region.
std::set<Edge> dream_edge_set(const Permutation& w, const PipeDream& d);

// Reduced pipe dreams of w paired with their simplex trees; the edge sets are
// validated to be spanning trees of the closure.
std::vector<std::pair<PipeDream, LabeledTree>> map_M(const Permutation& w);

// |det| = 1 for the (m-1)x(m-1) matrix of the edge vectors with the last
// coordinate projected out.  Requires a spanning tree.
bool simplex_is_unimodular(const LabeledTree& t);

// Simplex count of the canonical triangulation; each simplex is unimodular,
// so this is the normalized volume of P(tree).
long long normalized_volume(const DirectedGraph& tree);
long long normalized_volume(const Permutation& w);

// Coefficients of x in the edge basis of a spanning tree, aligned with the
// sorted edge order.  x must have size m+1 (index 0 unused) and sum to zero.
std::vector<long long> tree_basis_coefficients(const LabeledTree& t,
                                               const std::vector<long long>& x);

// Is x in the dilate s * conv(0, e_i - e_j over t)?  `open` asks for the
// strict interior instead.
bool simplex_contains(const LabeledTree& t, const std::vector<long long>& x,
                      long long s, bool open = false);

// Lattice points of t * P(g) for any graph with ascending edges, by exact
// enumeration of nonnegative integer combinations of closure edges with
// total dilation at most t.  Does not assume a noncrossing graph.
long long ehrhart_count(const DirectedGraph& g, long long t, int max_m = 8);

// For (i,j),(j,k) in G0: G1 drops (j,k), G2 drops (i,j), G3 drops both; all
// three gain (i,k).
std::array<DirectedGraph, 3> reduction_step_graphs(const DirectedGraph& g0,
                                                   int i, int j, int k);

// The closure edge (k,l) with e_k - e_l strictly inside the cone spanned by
// the tree's edge vectors, if any; such an edge is unique and equals (1,m),
// occurring exactly when the tree is the path 1-2-...-m.
std::optional<Edge> interior_vertex_of_tree(const DirectedGraph& tree);
std::optional<Edge> interior_vertex(const Permutation& w);

// Abstract complex with the closure edges as vertices and the canonical
// simplex trees as facets.
SimplicialComplex triangulation_complex(const DirectedGraph& tree);
SimplicialComplex vertex_figure_complex(const Permutation& w);

}  // namespace pd
