#include "pd/pipedream.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace pd {

PipeDream make_pipe_dream(int n, Diagram crosses) {
    if (n < 1) throw std::invalid_argument("board size must be positive");
    for (const auto& [r, c] : crosses)
        if (r < 1 || c < 1 || r + c > n)
            throw std::invalid_argument("cross outside the staircase board");
    return PipeDream{n, std::move(crosses)};
}

namespace {

// staircase cells in reading order: rows n-1..1, left to right within a row
std::vector<Cell> reading_cells(int n) {
    std::vector<Cell> cells;
    for (int r = n - 1; r >= 1; --r)
        for (int c = 1; r + c <= n; ++c) cells.push_back({r, c});
    return cells;
}

void require_dominant(const std::optional<Partition>& lam) {
    if (!lam)
        throw std::invalid_argument(
            "permutation must fix 1 and be dominant past the first position");
}

void subword_dfs(const std::vector<Cell>& cells, std::size_t idx, int n,
                 const Permutation& target, const Permutation& cur,
                 Diagram& chosen, bool allow_absorb,
                 std::vector<PipeDreamWithCodim>& out) {
    if (!bruhat_leq(cur, target)) return;  // the trace only climbs from here
    if (idx == cells.size()) {
        if (cur == target)
            out.push_back({PipeDream{n, chosen},
                           static_cast<int>(chosen.size()) - target.length()});
        return;
    }
    const auto [r, c] = cells[idx];
    subword_dfs(cells, idx + 1, n, target, cur, chosen, allow_absorb, out);
    Permutation next = demazure_right(cur, r + c - 1);
    if (next != cur || allow_absorb) {
        chosen.insert({r, c});
        subword_dfs(cells, idx + 1, n, target, next, chosen, allow_absorb, out);
        chosen.erase({r, c});
    }
}

std::vector<PipeDreamWithCodim> subword_search(const Permutation& w,
                                               bool allow_absorb) {
    std::vector<PipeDreamWithCodim> out;
    Diagram chosen;
    subword_dfs(reading_cells(w.size()), 0, w.size(), w,
                Permutation({1}).extended_to(w.size()), chosen, allow_absorb,
                out);
    std::sort(out.begin(), out.end(),
              [](const PipeDreamWithCodim& a, const PipeDreamWithCodim& b) {
                  return a.dream < b.dream;
              });
    return out;
}

}  // namespace

Permutation trace(const PipeDream& d) {
    Permutation u = Permutation({1}).extended_to(d.n);
    for (const auto& [r, c] : reading_cells(d.n))
        if (d.crosses.count({r, c})) u = demazure_right(u, r + c - 1);
    return u;
}

bool is_reduced(const PipeDream& d) { return codimension(d) == 0; }

int codimension(const PipeDream& d) {
    return static_cast<int>(d.crosses.size()) - trace(d).length();
}

PipeDream bottom_pipe_dream(const Permutation& w) {
    auto lam = is_dominant_1form(w);
    require_dominant(lam);
    Diagram b;
    auto rows = conjugate(*lam);  // shape row lengths, anchored at row 2
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int c = 1; c <= rows[i]; ++c) b.insert({i + 2, c});
    return make_pipe_dream(w.size(), std::move(b));
}

PipeDream top_pipe_dream(const Permutation& w) {
    auto lam = is_dominant_1form(w);
    require_dominant(lam);
    Diagram t;
    for (int j = 0; j < static_cast<int>(lam->size()); ++j)
        for (int r = 1; r <= (*lam)[j]; ++r) t.insert({r, j + 2});
    return make_pipe_dream(w.size(), std::move(t));
}

std::vector<PipeDream> ladder_moves(const PipeDream& d) {
    auto crossed = [&](int r, int c) { return d.crosses.count({r, c}) != 0; };
    std::vector<PipeDream> out;
    for (const auto& [i, j] : d.crosses) {
        if (crossed(i, j + 1)) continue;  // cell beside the mover must be open
        int r = i - 1;
        while (r >= 1 && crossed(r, j) && crossed(r, j + 1)) --r;
        if (r >= 1 && !crossed(r, j) && !crossed(r, j + 1) && r + j + 1 <= d.n) {
            Diagram moved = d.crosses;
            moved.erase({i, j});
            moved.insert({r, j + 1});
            out.push_back(PipeDream{d.n, std::move(moved)});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PipeDream> enumerate_reduced(const Permutation& w) {
    std::vector<PipeDream> out;
    if (is_dominant_1form(w)) {
        std::set<PipeDream> seen;
        std::vector<PipeDream> stack{bottom_pipe_dream(w)};
        seen.insert(stack.back());
        while (!stack.empty()) {
            PipeDream d = std::move(stack.back());
            stack.pop_back();
            for (auto& next : ladder_moves(d))
                if (seen.insert(next).second) stack.push_back(next);
        }
        out.assign(seen.begin(), seen.end());
    } else {
        for (auto& dc : subword_search(w, false)) out.push_back(std::move(dc.dream));
    }
    return out;
}

std::vector<PipeDream> enumerate_reduced_by_subwords(const Permutation& w) {
    std::vector<PipeDream> out;
    for (auto& dc : subword_search(w, false)) out.push_back(std::move(dc.dream));
    return out;
}

std::vector<PipeDreamWithCodim> enumerate_all_pipe_dreams(const Permutation& w,
                                                          int max_n) {
    if (w.size() > max_n)
        throw std::invalid_argument(
            "board too large for the full pipe-dream search; raise max_n");
    return subword_search(w, true);
}

std::string ascii_render(const PipeDream& d) {
    std::string s;
    for (int r = 1; r <= d.n; ++r) {
        for (int c = 1; r + c <= d.n + 1; ++c)
            s += d.crosses.count({r, c}) ? '+' : '%';
        s += '\n';
    }
    return s;
}

}  // namespace pd
