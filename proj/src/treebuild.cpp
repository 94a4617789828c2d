#include "pd/treebuild.hpp"

#include "pd/pipedream.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pd {

namespace {

Partition dominant_shape(const Permutation& w) {
    auto lam = is_dominant_1form(w);
    if (!lam)
        throw std::invalid_argument(
            "permutation must fix 1 and be dominant past the first position");
    return *lam;
}

int part(const Partition& lam, int c) {  // lambda_c, zero past the end
    return c >= 1 && c <= static_cast<int>(lam.size()) ? lam[c - 1] : 0;
}

// box of the bottom dream: column c holds rows 2..lambda_c+1
bool in_bottom(const Partition& lam, int r, int c) {
    return c >= 1 && r >= 2 && r <= part(lam, c) + 1;
}

std::vector<int> heights(const Partition& lam) {
    int q = static_cast<int>(lam.size());
    std::vector<int> h(q + 1);
    h[0] = part(lam, 1) + 1;
    for (int c = 2; c <= q + 1; ++c)
        h[c - 1] = std::max(part(lam, c - 1), part(lam, c) + 1);
    return h;
}

}  // namespace

std::vector<int> region_column_heights(const Permutation& w) {
    return heights(dominant_shape(w));
}

std::vector<int> column_counts(const Permutation& w) {
    return region_column_heights(w);
}

std::set<Cell> region(const Permutation& w) {
    auto h = region_column_heights(w);
    std::set<Cell> boxes;
    for (int c = 1; c <= static_cast<int>(h.size()); ++c)
        for (int r = 1; r <= h[c - 1]; ++r) boxes.insert({r, c});
    return boxes;
}

BoundaryLabeling boundary_labels(const Permutation& w) {
    Partition lam = dominant_shape(w);
    auto h = heights(lam);
    auto rows = conjugate(lam);  // bottom dream row lengths, anchored at row 2
    [[maybe_unused]] auto row_len = [&](int r) {
        return r >= 2 && r <= static_cast<int>(rows.size()) + 1 ? rows[r - 2] : 0;
    };
    BoundaryLabeling out;
    int counter = 0;
    int ncols = static_cast<int>(h.size());
    for (int c = 1; c <= ncols; ++c) {
        bool fresh = in_bottom(lam, h[c - 1], c) && !in_bottom(lam, h[c - 1] + 1, c - 1);
        // equivalent reading: fresh east steps sit where the box below-left
        // cannot continue the bottom dream's next row
        assert(fresh == (in_bottom(lam, h[c - 1], c) &&
                         (c == 1 || c != row_len(h[c - 1] + 1) + 1)));
        int label = (fresh || counter == 0) ? ++counter : counter;
        out.steps.push_back({false, h[c - 1], c, fresh, label});
        out.col_label[c] = label;
        int next = c < ncols ? h[c] : 0;
        for (int r = h[c - 1]; r > next; --r) {
            out.steps.push_back({true, r, c, true, ++counter});
            out.row_label[r] = counter;
        }
    }
    out.m = counter;
    return out;
}

Edge box_label(const BoundaryLabeling& bl, const Cell& box) {
    auto cit = bl.col_label.find(box.second);
    auto rit = bl.row_label.find(box.first);
    if (cit == bl.col_label.end() || rit == bl.row_label.end())
        throw std::invalid_argument("box outside the region");
    assert(cit->second < rit->second);
    return {cit->second, rit->second};
}

std::set<Cell> dots(const Permutation& w) {
    Partition lam = dominant_shape(w);
    auto h = heights(lam);
    std::set<Cell> out;
    for (int c = 1; c <= static_cast<int>(h.size()); ++c)
        for (int r = part(lam, c) + 1; r <= h[c - 1]; ++r) out.insert({r, c});
    return out;
}

LabeledTree tree(const Permutation& w) {
    BoundaryLabeling bl = boundary_labels(w);
    std::set<Edge> edges;
    for (const Cell& d : dots(w)) edges.insert(box_label(bl, d));
    return make_tree(bl.m, std::move(edges));
}

std::map<Edge, Cell> phi(const Permutation& w) {
    BoundaryLabeling bl = boundary_labels(w);
    std::map<Edge, Cell> out;
    for (const Cell& box : region(w)) {
        auto [it, inserted] = out.emplace(box_label(bl, box), box);
        assert(inserted);
        (void)it;
        (void)inserted;
    }
    return out;
}

SimplicialComplex region_complex(const Permutation& w) {
    if (w.size() < 2)
        throw std::invalid_argument("region complex needs a board of size >= 2");
    auto boxes = region(w);
    return restrict_to(pipe_dream_complex(w),
                       {boxes.begin(), boxes.end()});
}

}  // namespace pd
