#pragma once

#include "pd/graphs.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <map>
#include <vector>

namespace pd {

using Coefficient = boost::multiprecision::cpp_int;

// Product of variables x_ij (multiset; reductions can square a variable
// transiently) times beta^beta_pow.  vars stays sorted.
struct Monomial {
    std::vector<Edge> vars;
    int beta_pow = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// beta-degree ascending, then graded lex on the variable list.
bool operator<(const Monomial& a, const Monomial& b);

// Polynomials in the x_ij and beta; no zero coefficients stored.
using BetaPolynomial = std::map<Monomial, Coefficient>;

// m[T]: the squarefree monomial of the edges of a graph.
Monomial tree_monomial(const DirectedGraph& g);

// Monomial in t_1, t_2, ... (exponents, trailing zeros trimmed) and beta.
struct TMonomial {
    std::vector<int> t_exp;
    int beta_pow = 0;

    friend bool operator==(const TMonomial&, const TMonomial&) = default;
};

bool operator<(const TMonomial& a, const TMonomial& b);

using TPolynomial = std::map<TMonomial, Coefficient>;

// One application of x_ij x_jk -> x_ik (x_ij + x_jk + beta) to the term with
// monomial key `target`; every other term is untouched.  Throws if the target
// term is missing or lacks the pair.
BetaPolynomial reduce_step(const BetaPolynomial& p, const Monomial& target,
                           int i, int j, int k);

enum class Strategy {
    canonical,              // deterministic, prefers noncrossing reductions
    random_any,             // uniform over reducible triples, seeded
    random_noncrossing,     // uniform over noncrossing triples when available
};

// Rewrites until no term contains a reducible pair.  Each monomial is
// reduced depth-first, one triple at a time; for squarefree tree input the
// output is asserted squarefree and homogeneous (#vars + beta_pow = #edges).
BetaPolynomial reduced_form(const Monomial& start, Strategy strategy,
                            unsigned seed = 1);
BetaPolynomial reduced_form(const DirectedGraph& tree, Strategy strategy,
                            unsigned seed = 1);

// Replays an explicit list of triples; each (i,j,k) is applied simultaneously
// to every term containing the pair before moving on.  The result need not be
// fully reduced.
BetaPolynomial apply_reductions(const BetaPolynomial& p,
                                const std::vector<std::array<int, 3>>& order);

// The fixed deterministic reduced form used for cross-identities.
BetaPolynomial crf(const DirectedGraph& tree);

// x_ij -> t_i.
TPolynomial t_substitute(const BetaPolynomial& p);

// x_{i_k, j} -> t_k where i_1 < ... < i_v are the vertices of `tree` with
// outgoing edges; rejects variables whose source is not one of them.
TPolynomial tilde_t_substitute(const BetaPolynomial& p,
                               const DirectedGraph& tree);

// One block of the recursive path decomposition of a noncrossing tree.
struct PseudoComponent {
    std::set<Edge> edges;
    int lo = 0, hi = 0;   // the interval [lo, hi] the block lives on
    bool left = false;    // no edge of the whole tree enters lo from the left
    bool right = false;   // no edge of the whole tree leaves hi to the right

    friend bool operator==(const PseudoComponent&,
                           const PseudoComponent&) = default;
};

std::vector<PseudoComponent> pseudo_components(const DirectedGraph& tree);

// The noncrossing reduced form, assembled directly as the constrained-forest
// sum: each noncrossing alternating forest F of the transitive closure that
// meets every pseudo-component constraint contributes m[F] beta^(|E(T)|-|F|).
BetaPolynomial noncross_reduced_form(const DirectedGraph& tree);

// Redraws the tree so the reduction at (k,l),(l,m) becomes noncrossing:
// identity order if it already is, else the component of k, then the rest,
// then the component of m, each block ascending.  Returns the relabelled
// tree (position space; edges always ascend) and the order, where
// order[p-1] is the original vertex drawn at position p.  The arrangement
// usually yields a noncrossing tree but not always (e.g. the tree
// {(1,5),(2,3),(3,4),(3,5)} at (2,3),(3,4)); callers needing a noncrossing
// result must check is_noncrossing on the returned edges.
std::pair<LabeledTree, std::vector<int>> reorder_T_klm(const DirectedGraph& tree,
                                                       int k, int l, int m);

}  // namespace pd
