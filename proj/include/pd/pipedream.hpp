#pragma once

#include "pd/permutation.hpp"

#include <string>
#include <tuple>
#include <vector>

namespace pd {

// Pipe dream on the staircase board of S_n: crosses sit at cells (r,c),
// 1-indexed, with r+c <= n.  Cells on the antidiagonal r+c = n+1 are always
// elbows.
struct PipeDream {
    int n = 1;
    Diagram crosses;

    friend bool operator==(const PipeDream&, const PipeDream&) = default;
    friend bool operator<(const PipeDream& a, const PipeDream& b) {
        return std::tie(a.n, a.crosses) < std::tie(b.n, b.crosses);
    }
};

// Validates that every cross lies strictly inside the staircase.
PipeDream make_pipe_dream(int n, Diagram crosses);

// Demazure product of the cross letters s_{r+c-1}, reading rows bottom to
// top and each row left to right.
Permutation trace(const PipeDream& d);

bool is_reduced(const PipeDream& d);

// Number of crosses beyond the length of the traced permutation.
int codimension(const PipeDream& d);

// Left-aligned dream of a dominant-1form permutation; throws otherwise.
PipeDream bottom_pipe_dream(const Permutation& w);

// The same shape pushed against row 1, shifted one column right.
PipeDream top_pipe_dream(const Permutation& w);

// All dreams reachable from d by a single ladder move, sorted.
std::vector<PipeDream> ladder_moves(const PipeDream& d);

// All reduced pipe dreams of w, sorted.  Walks the ladder-move closure of the
// bottom dream when w is dominant-1form, otherwise falls back to the pruned
// subword search.
std::vector<PipeDream> enumerate_reduced(const Permutation& w);

// Pruned depth-first subword search over the staircase reading word.  Same
// result as enumerate_reduced; kept public as an independent route.
std::vector<PipeDream> enumerate_reduced_by_subwords(const Permutation& w);

struct PipeDreamWithCodim {
    PipeDream dream;
    int codim = 0;
};

// All pipe dreams of any size whose trace is w, sorted by dream.  Refuses
// boards larger than max_n.
std::vector<PipeDreamWithCodim> enumerate_all_pipe_dreams(const Permutation& w,
                                                          int max_n = 6);

// Rows 1..n top to bottom, '+' for a cross and '%' for an elbow.
std::string ascii_render(const PipeDream& d);

}  // namespace pd
