#pragma once

#include "pd/graphs.hpp"
#include "pd/permutation.hpp"
#include "pd/simplicial.hpp"

#include <map>
#include <set>
#include <vector>

namespace pd {

// All of this file applies to dominant-1form permutations only; every entry
// point throws std::invalid_argument otherwise.

// Heights of the columns of the region: the corner box (1,1), the bottom
// dream and the top dream stacked together form a top-left-justified shape.
std::vector<int> region_column_heights(const Permutation& w);

// The boxes of that shape.
std::set<Cell> region(const Permutation& w);

// Alias used when the heights act as the per-column budget of the exponent
// vectors showing up downstream.
std::vector<int> column_counts(const Permutation& w);

// One step of the lattice walk along the lower-right rim of the region, from
// its southwest corner to its northeast corner.
struct BoundaryStep {
    bool is_north = false;
    int row = 0;  // east steps: the depth walked at; north steps: row crossed
    int col = 0;
    bool fresh = false;  // whether the step carries a fresh label
    int label = 0;
};

// Fresh labels 1..m are handed out to every north step and to the east steps
// under a column whose lowest region box is a bottom-dream box not shadowed
// from the left; the remaining east steps repeat the previous label.
struct BoundaryLabeling {
    std::vector<BoundaryStep> steps;
    int m = 0;
    std::map<int, int> col_label;  // region column -> its east step's label
    std::map<int, int> row_label;  // region row -> its north step's label
};

BoundaryLabeling boundary_labels(const Permutation& w);

// The label pair of a region box: (column label, row label), always ascending.
Edge box_label(const BoundaryLabeling& bl, const Cell& box);

// Boxes of the region holding a dot: in column c the lowest H_c - lambda_c
// boxes, one dot per box.
std::set<Cell> dots(const Permutation& w);

// The tree on 1..m with one edge per dot, labelled through the boundary walk.
LabeledTree tree(const Permutation& w);

// Label pair -> region box, over all boxes of the region (injective).
std::map<Edge, Cell> phi(const Permutation& w);

// Pipe dream complex restricted to the region; requires |w| >= 2.
SimplicialComplex region_complex(const Permutation& w);

}  // namespace pd
