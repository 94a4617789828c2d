#pragma once

// Permutations in one-line notation, their Rothe diagrams, and the
// partition encoding of dominant permutations that fix 1.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pd {

// Box of a diagram or board: (row, col), both 1-indexed, rows top to bottom.
using Cell = std::pair<int, int>;
using Diagram = std::set<Cell>;

// Young shape recorded by its column heights, weakly decreasing left to right.
using Partition = std::vector<int>;

class Permutation {
public:
    Permutation() : word_{1} {}
    explicit Permutation(std::vector<int> word);

    int size() const { return static_cast<int>(word_.size()); }
    // value at position i, 1-indexed
    int operator()(int i) const { return word_[i - 1]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    int length() const;   // number of inversions
    bool is_identity() const;

    // same permutation up to trailing fixed points padded on the right
    Permutation extended_to(int n) const;

    std::string to_string() const;   // "1,5,3,4,2"

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

Permutation parse_permutation(const std::string& text);

// D(w) = {(w_j, i) : i < j, w_i > w_j}.
Diagram rothe_diagram(const Permutation& w);

// w fixes 1 and D(w) is a Young shape whose northwest box is (2,2).
// Returns the shape's column heights when so (empty partition for the
// identity), std::nullopt otherwise.
std::optional<Partition> is_dominant_1form(const Permutation& w);

// Row lengths of the shape with column heights lambda (its conjugate).
std::vector<int> conjugate(const Partition& lambda);

// Smallest board size whose staircase holds both aligned cross placements
// of the shape lambda.
int minimal_board_size(const Partition& lambda);

// The unique dominant permutation fixing 1 with shape lambda, on the
// minimal board. Throws if lambda is not weakly decreasing positive.
Permutation perm_from_partition(const Partition& lambda);

// u <= w in Bruhat order (sorted-prefix comparison).
bool bruhat_leq(const Permutation& u, const Permutation& w);

// u * s_i when that raises length, else u (Demazure product by one letter;
// s_i swaps positions i, i+1).
Permutation demazure_right(const Permutation& u, int i);

std::vector<Permutation> all_permutations(int n);

}  // namespace pd
