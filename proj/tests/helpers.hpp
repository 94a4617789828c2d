#pragma once

#include "pd/graphs.hpp"
#include "pd/permutation.hpp"
#include "pd/rootpoly.hpp"
#include "pd/treebuild.hpp"

#include <set>
#include <vector>

namespace pdtest {

// Dominant-1form permutations on boards of size 2..max_n whose region stays
// small enough for exhaustive cross-checks (at most 9 boxes including the
// corner).  Covers 14 distinct shapes when max_n is 6.
inline std::vector<pd::Permutation> shape_family(int max_n = 6) {
    std::vector<pd::Permutation> out;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& w : pd::all_permutations(n)) {
            if (!pd::is_dominant_1form(w)) continue;
            if (pd::region(w).size() <= 9) out.push_back(w);
        }
    return out;
}

// Every noncrossing spanning tree on vertices 1..m (1, 3, 12, 55, 273 of
// them for m = 2..6), by edge-subset search.
inline std::vector<pd::LabeledTree> noncrossing_trees(int m) {
    std::vector<pd::Edge> all;
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j <= m; ++j) all.push_back({i, j});
    std::vector<pd::LabeledTree> out;
    std::set<pd::Edge> chosen;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (chosen.size() == static_cast<std::size_t>(m - 1)) {
            pd::DirectedGraph g{m, chosen};
            if (pd::is_spanning_tree(g) && pd::is_noncrossing(g.edges))
                out.push_back(std::move(g));
            return;
        }
        if (idx == all.size()) return;
        self(self, idx + 1);
        chosen.insert(all[idx]);
        self(self, idx + 1);
        chosen.erase(all[idx]);
    };
    rec(rec, 0);
    return out;
}

}  // namespace pdtest
