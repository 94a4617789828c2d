#include "pd/subdivision.hpp"

#include "pd/rootpoly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

namespace pd {

namespace {

bool arcs_cross(const Edge& e, const Edge& f) {
    auto [a, b] = e;
    auto [c, d] = f;
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

void insert_var(std::vector<Edge>& vars, const Edge& e) {
    vars.insert(std::upper_bound(vars.begin(), vars.end(), e), e);
}

// Drops one copy each of (i,j) and (j,k); nullopt when a factor is absent.
std::optional<std::vector<Edge>> strip_pair(const std::vector<Edge>& vars,
                                            int i, int j, int k) {
    std::vector<Edge> rest = vars;
    for (const Edge& e : {Edge{i, j}, Edge{j, k}}) {
        auto it = std::find(rest.begin(), rest.end(), e);
        if (it == rest.end()) return std::nullopt;
        rest.erase(it);
    }
    return rest;
}

// Distinct (i,j,k) with x_ij and x_jk present, in lex order.
std::vector<std::array<int, 3>> reducible_triples(const Monomial& mo) {
    std::vector<std::array<int, 3>> out;
    for (const auto& [i, j] : mo.vars)
        for (const auto& [j2, k] : mo.vars)
            if (j2 == j && j < k) out.push_back({i, j, k});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// The reduction is noncrossing when the incoming x_ik crosses nothing left
// in the term.
bool triple_noncrossing(const std::vector<Edge>& rest, int i, int k) {
    for (const auto& e : rest)
        if (arcs_cross(e, {i, k})) return false;
    return true;
}

std::array<Monomial, 3> expand(const Monomial& mo, int i, int j, int k) {
    std::vector<Edge> rest = strip_pair(mo.vars, i, j, k).value();
    Monomial keep_ij{rest, mo.beta_pow}, keep_jk{rest, mo.beta_pow};
    Monomial beta{rest, mo.beta_pow + 1};
    insert_var(keep_ij.vars, {i, k});
    insert_var(keep_ij.vars, {i, j});
    insert_var(keep_jk.vars, {i, k});
    insert_var(keep_jk.vars, {j, k});
    insert_var(beta.vars, {i, k});
    return {keep_ij, keep_jk, beta};
}

void add_term(BetaPolynomial& p, const Monomial& mo, const Coefficient& c) {
    auto it = p.find(mo);
    if (it == p.end()) {
        if (c != 0) p.emplace(mo, c);
        return;
    }
    it->second += c;
    if (it->second == 0) p.erase(it);
}

void reduce_monomial(const Monomial& mo, const Coefficient& mult,
                     BetaPolynomial& out, Strategy strategy, std::mt19937& rng) {
    auto triples = reducible_triples(mo);
    if (triples.empty()) {
        add_term(out, mo, mult);
        return;
    }
    std::size_t pick = 0;
    switch (strategy) {
        case Strategy::canonical: {
            for (std::size_t s = 0; s < triples.size(); ++s) {
                auto [i, j, k] = triples[s];
                if (triple_noncrossing(*strip_pair(mo.vars, i, j, k), i, k)) {
                    pick = s;
                    break;
                }
            }
            break;  // fallback: lex-smallest triple
        }
        case Strategy::random_any:
            pick = rng() % triples.size();
            break;
        case Strategy::random_noncrossing: {
            std::vector<std::size_t> nc;
            for (std::size_t s = 0; s < triples.size(); ++s) {
                auto [i, j, k] = triples[s];
                if (triple_noncrossing(*strip_pair(mo.vars, i, j, k), i, k))
                    nc.push_back(s);
            }
            pick = nc.empty() ? rng() % triples.size() : nc[rng() % nc.size()];
            break;
        }
    }
    auto [i, j, k] = triples[pick];
    for (const Monomial& child : expand(mo, i, j, k))
        reduce_monomial(child, mult, out, strategy, rng);
}

bool squarefree(const Monomial& mo) {
    return std::adjacent_find(mo.vars.begin(), mo.vars.end()) == mo.vars.end();
}

}  // namespace

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.beta_pow != b.beta_pow) return a.beta_pow < b.beta_pow;
    if (a.vars.size() != b.vars.size()) return a.vars.size() < b.vars.size();
    return a.vars < b.vars;
}

bool operator<(const TMonomial& a, const TMonomial& b) {
    if (a.beta_pow != b.beta_pow) return a.beta_pow < b.beta_pow;
    int da = std::accumulate(a.t_exp.begin(), a.t_exp.end(), 0);
    int db = std::accumulate(b.t_exp.begin(), b.t_exp.end(), 0);
    if (da != db) return da < db;
    return a.t_exp < b.t_exp;
}

Monomial tree_monomial(const DirectedGraph& g) {
    return Monomial{{g.edges.begin(), g.edges.end()}, 0};
}

BetaPolynomial reduce_step(const BetaPolynomial& p, const Monomial& target,
                           int i, int j, int k) {
    if (!(i < j && j < k))
        throw std::invalid_argument("reduction triple must satisfy i<j<k");
    auto it = p.find(target);
    if (it == p.end()) throw std::invalid_argument("no term with that monomial");
    if (!strip_pair(target.vars, i, j, k))
        throw std::invalid_argument("target lacks the pair x_ij x_jk");
    BetaPolynomial out = p;
    Coefficient c = it->second;
    out.erase(target);
    for (const Monomial& child : expand(target, i, j, k)) add_term(out, child, c);
    return out;
}

BetaPolynomial reduced_form(const Monomial& start, Strategy strategy,
                            unsigned seed) {
    std::mt19937 rng(seed);
    BetaPolynomial out;
    reduce_monomial(start, 1, out, strategy, rng);
    bool start_squarefree = squarefree(start);
    for (const auto& [mo, c] : out) {
        assert(mo.vars.size() + mo.beta_pow ==
               start.vars.size() + static_cast<std::size_t>(start.beta_pow));
        assert(!start_squarefree || squarefree(mo));
        assert(c > 0);
        (void)mo;
        (void)c;
    }
    (void)start_squarefree;
    return out;
}

BetaPolynomial reduced_form(const DirectedGraph& tree, Strategy strategy,
                            unsigned seed) {
    if (!is_spanning_tree(tree))
        throw std::invalid_argument("reduced_form expects a spanning tree");
    return reduced_form(tree_monomial(tree), strategy, seed);
}

BetaPolynomial apply_reductions(const BetaPolynomial& p,
                                const std::vector<std::array<int, 3>>& order) {
    BetaPolynomial cur = p;
    for (const auto& [i, j, k] : order) {
        if (!(i < j && j < k))
            throw std::invalid_argument("reduction triple must satisfy i<j<k");
        BetaPolynomial next;
        for (const auto& [mo, c] : cur) {
            if (!strip_pair(mo.vars, i, j, k)) {
                add_term(next, mo, c);
                continue;
            }
            for (const Monomial& child : expand(mo, i, j, k))
                add_term(next, child, c);
        }
        cur = std::move(next);
    }
    return cur;
}

BetaPolynomial crf(const DirectedGraph& tree) {
    if (!is_spanning_tree(tree) || !is_noncrossing(tree.edges))
        throw std::invalid_argument("crf expects a noncrossing tree");
    return reduced_form(tree, Strategy::canonical);
}

TPolynomial t_substitute(const BetaPolynomial& p) {
    TPolynomial out;
    for (const auto& [mo, c] : p) {
        TMonomial tm{{}, mo.beta_pow};
        for (const auto& [i, j] : mo.vars) {
            (void)j;
            if (tm.t_exp.size() < static_cast<std::size_t>(i)) tm.t_exp.resize(i);
            ++tm.t_exp[i - 1];
        }
        auto it = out.find(tm);
        if (it == out.end())
            out.emplace(std::move(tm), c);
        else if ((it->second += c) == 0)
            out.erase(it);
    }
    return out;
}

TPolynomial tilde_t_substitute(const BetaPolynomial& p,
                               const DirectedGraph& tree) {
    std::map<int, int> rank;  // source vertex -> its index among sources
    for (const auto& [i, j] : tree.edges) {
        (void)j;
        rank.emplace(i, 0);
    }
    int next = 0;
    for (auto& [src, r] : rank) {
        (void)src;
        r = ++next;
    }
    TPolynomial out;
    for (const auto& [mo, c] : p) {
        TMonomial tm{{}, mo.beta_pow};
        for (const auto& [i, j] : mo.vars) {
            (void)j;
            auto it = rank.find(i);
            if (it == rank.end())
                throw std::invalid_argument(
                    "variable source is not a source vertex of the tree");
            if (tm.t_exp.size() < static_cast<std::size_t>(it->second))
                tm.t_exp.resize(it->second);
            ++tm.t_exp[it->second - 1];
        }
        auto it = out.find(tm);
        if (it == out.end())
            out.emplace(std::move(tm), c);
        else if ((it->second += c) == 0)
            out.erase(it);
    }
    return out;
}

namespace {

// Unique path between the extremes of one block, as undirected tree walk.
std::set<Edge> extreme_path(const std::set<Edge>& edges, int lo, int hi) {
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::map<int, int> prev;
    std::vector<int> stack = {lo};
    prev[lo] = lo;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!prev.count(w)) {
                prev[w] = v;
                stack.push_back(w);
            }
    }
    assert(prev.count(hi));
    std::set<Edge> path;
    for (int v = hi; v != lo; v = prev[v])
        path.insert({std::min(v, prev[v]), std::max(v, prev[v])});
    return path;
}

void decompose(const std::set<Edge>& block, const DirectedGraph& whole,
               std::vector<PseudoComponent>& out) {
    int lo = block.begin()->first, hi = 0;
    for (const auto& [a, b] : block) {
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    }
    std::set<Edge> path = extreme_path(block, lo, hi);
    PseudoComponent pc{path, lo, hi, true, true};
    for (const auto& [a, b] : whole.edges) {
        if (b == lo) pc.left = false;   // an edge (s, lo) with s < lo
        if (a == hi) pc.right = false;  // an edge (hi, s) with hi < s
    }
    out.push_back(std::move(pc));

    // Remaining edges split at each path vertex: its incoming and outgoing
    // bundles belong to different blocks, so the blocks are as small as the
    // min/max-attachment rule allows.
    std::set<int> on_path;
    for (const auto& [a, b] : path) {
        on_path.insert(a);
        on_path.insert(b);
    }
    std::map<std::pair<int, int>, int> node;  // (vertex, side) -> dsu index
    auto node_id = [&](int v, int side) {
        int key_side = on_path.count(v) ? side : 0;
        auto [it, fresh] = node.try_emplace({v, key_side},
                                            static_cast<int>(node.size()));
        (void)fresh;
        return it->second;
    };
    std::vector<Edge> rest;
    std::vector<std::pair<int, int>> ends;
    for (const auto& e : block)
        if (!path.count(e)) {
            rest.push_back(e);
            ends.push_back({node_id(e.first, 1), node_id(e.second, 0)});
        }
    std::vector<int> parent(node.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : ends) parent[find(u)] = find(v);
    std::map<int, std::set<Edge>> blocks;
    for (std::size_t s = 0; s < rest.size(); ++s)
        blocks[find(ends[s].first)].insert(rest[s]);
    std::vector<std::set<Edge>> ordered;
    for (auto& [root, edges] : blocks) {
        (void)root;
        ordered.push_back(std::move(edges));
    }
    std::sort(ordered.begin(), ordered.end());
    for (const auto& sub : ordered) decompose(sub, whole, out);
}

}  // namespace

std::vector<PseudoComponent> pseudo_components(const DirectedGraph& tree) {
    if (!is_spanning_tree(tree) || !is_noncrossing(tree.edges))
        throw std::invalid_argument(
            "pseudo-components are defined for noncrossing trees");
    std::vector<PseudoComponent> out;
    decompose(tree.edges, tree, out);
    return out;
}

BetaPolynomial noncross_reduced_form(const DirectedGraph& tree) {
    std::vector<PcConstraint> constraints;
    for (const auto& pc : pseudo_components(tree))
        constraints.push_back({pc.lo, pc.hi, pc.left, pc.right});
    BetaPolynomial out;
    int d = static_cast<int>(tree.edges.size());
    for (const auto& f : noncrossing_alternating_spanning_forests(
             transitive_closure(tree), constraints)) {
        Monomial mo = tree_monomial(f);
        mo.beta_pow = d - static_cast<int>(f.edges.size());
        add_term(out, mo, 1);
    }
    return out;
}

std::pair<LabeledTree, std::vector<int>> reorder_T_klm(const DirectedGraph& tree,
                                                       int k, int l, int m) {
    if (!is_spanning_tree(tree))
        throw std::invalid_argument("reorder expects a spanning tree");
    auto [g1, g2, g3] = reduction_step_graphs(tree, k, l, m);
    std::vector<int> order(tree.m);
    std::iota(order.begin(), order.end(), 1);
    if (is_noncrossing(g1.edges) && is_noncrossing(g2.edges) &&
        is_noncrossing(g3.edges))
        return {tree, order};

    DirectedGraph cut = tree;
    cut.edges.erase({k, l});
    cut.edges.erase({l, m});
    std::vector<int> v1, v2, rest;
    for (const auto& comp : components(cut)) {
        bool has_k = std::count(comp.begin(), comp.end(), k) > 0;
        bool has_m = std::count(comp.begin(), comp.end(), m) > 0;
        auto& dst = has_k ? v1 : has_m ? v2 : rest;
        dst.insert(dst.end(), comp.begin(), comp.end());
    }
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    std::sort(rest.begin(), rest.end());
    order.clear();
    order.insert(order.end(), v1.begin(), v1.end());
    order.insert(order.end(), rest.begin(), rest.end());
    order.insert(order.end(), v2.begin(), v2.end());

    std::vector<int> pos(tree.m + 1, 0);
    for (int p = 1; p <= tree.m; ++p) pos[order[p - 1]] = p;
    std::set<Edge> relabelled;
    for (const auto& [a, b] : tree.edges) {
        assert(pos[a] < pos[b]);  // blocks preserve relative order
        relabelled.insert({pos[a], pos[b]});
    }
    return {make_tree(tree.m, std::move(relabelled)), order};
}

}  // namespace pd
