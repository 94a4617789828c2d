#include "pd/permutation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pd {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    if (word_.empty())
        throw std::invalid_argument("permutation: empty word");
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
            throw std::invalid_argument("permutation: not a bijection on 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
    return Permutation(inv);
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (word_[i - 1] != i) return false;
    return true;
}

Permutation Permutation::extended_to(int n) const {
    if (n < size())
        throw std::invalid_argument("extended_to: shrinking a permutation");
    std::vector<int> w = word_;
    for (int v = size() + 1; v <= n; ++v) w.push_back(v);
    return Permutation(w);
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (i) out << ',';
        out << word_[i];
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> vals;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        std::istringstream f(tok);
        int v;
        while (f >> v) vals.push_back(v);
        if (!f.eof()) {
            f.clear();
            std::string rest;
            f >> rest;
            if (!rest.empty())
                throw std::invalid_argument("permutation: bad token '" + tok + "'");
        }
    }
    if (vals.empty())
        throw std::invalid_argument("permutation: nothing to parse");
    return Permutation(vals);
}

Diagram rothe_diagram(const Permutation& w) {
    Diagram d;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) d.insert({w(j), i});
    return d;
}

std::optional<Partition> is_dominant_1form(const Permutation& w) {
    if (w(1) != 1) return std::nullopt;
    Diagram d = rothe_diagram(w);
    if (d.empty()) return Partition{};
    // shift so the required anchor (2,2) lands at (1,1)
    std::set<Cell> shape;
    for (const Cell& b : d) {
        if (b.first < 2 || b.second < 2) return std::nullopt;
        shape.insert({b.first - 1, b.second - 1});
    }
    if (!shape.count({1, 1})) return std::nullopt;
    // Young condition: closed under moving up and left
    for (const Cell& b : shape) {
        if (b.first > 1 && !shape.count({b.first - 1, b.second})) return std::nullopt;
        if (b.second > 1 && !shape.count({b.first, b.second - 1})) return std::nullopt;
    }
    int ncols = 0;
    for (const Cell& b : shape) ncols = std::max(ncols, b.second);
    Partition lambda(ncols, 0);
    for (const Cell& b : shape) lambda[b.second - 1]++;
    for (int c = 1; c < ncols; ++c)
        assert(lambda[c - 1] >= lambda[c]);
    return lambda;
}

std::vector<int> conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> rows(lambda[0], 0);
    for (int h : lambda)
        for (int r = 0; r < h; ++r) rows[r]++;
    return rows;
}

static void check_partition(const Partition& lambda) {
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] <= 0)
            throw std::invalid_argument("partition: parts must be positive");
        if (i > 0 && lambda[i] > lambda[i - 1])
            throw std::invalid_argument("partition: parts must weakly decrease");
    }
}

int minimal_board_size(const Partition& lambda) {
    check_partition(lambda);
    if (lambda.empty()) return 1;
    int n = 0;
    std::vector<int> rows = conjugate(lambda);
    // left-aligned crosses occupy rows 2..z+1 with these lengths
    for (size_t r = 0; r < rows.size(); ++r)
        n = std::max(n, static_cast<int>(r) + 2 + rows[r]);
    // up-aligned crosses occupy columns 2..q+1 with heights lambda
    for (size_t c = 0; c < lambda.size(); ++c)
        n = std::max(n, lambda[c] + static_cast<int>(c) + 2);
    return n;
}

Permutation perm_from_partition(const Partition& lambda) {
    check_partition(lambda);
    int n = minimal_board_size(lambda);
    // trace the left-aligned placement: read rows bottom to top, each row
    // left to right, multiplying Demazure-wise by s_{row+col-1}
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    Permutation w{id};
    std::vector<int> rows = conjugate(lambda);
    for (int r = static_cast<int>(rows.size()) + 1; r >= 2; --r) {
        int len = rows[r - 2];
        for (int c = 1; c <= len; ++c) {
            assert(r + c <= n);
            w = demazure_right(w, r + c - 1);
        }
    }
    auto shape = is_dominant_1form(w);
    assert(shape && *shape == lambda);
    return w;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.size() != w.size())
        throw std::invalid_argument("bruhat_leq: mismatched sizes");
    std::vector<int> pu, pw;
    for (int k = 1; k <= u.size(); ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pw.insert(std::upper_bound(pw.begin(), pw.end(), w(k)), w(k));
        for (int i = 0; i < k; ++i)
            if (pu[i] > pw[i]) return false;
    }
    return true;
}

Permutation demazure_right(const Permutation& u, int i) {
    if (i < 1 || i >= u.size())
        throw std::invalid_argument("demazure_right: letter out of range");
    if (u(i) < u(i + 1)) {
        std::vector<int> w = u.word();
        std::swap(w[i - 1], w[i]);
        return Permutation(w);
    }
    return u;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace pd
