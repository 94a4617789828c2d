#include "pd/simplicial.hpp"

#include "pd/pipedream.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pd {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> facet_masks(const SimplicialComplex& k) {
    if (k.vertices().size() > 64)
        throw std::invalid_argument("complex too large for face enumeration");
    std::vector<Mask> masks;
    for (const auto& f : k.facets()) {
        Mask m = 0;
        for (int i : f) m |= Mask{1} << i;
        masks.push_back(m);
    }
    return masks;
}

std::set<Mask> face_masks(const SimplicialComplex& k) {
    std::set<Mask> faces;
    for (Mask f : facet_masks(k)) {
        // every submask of a facet, the facet and the empty face included
        Mask s = f;
        while (true) {
            faces.insert(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    return faces;
}

std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> v;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1) v.push_back(i);
    return v;
}

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// ridges lying in exactly one facet
std::vector<Mask> boundary_ridges(const SimplicialComplex& k) {
    if (!k.is_pure())
        throw std::invalid_argument("boundary requires a pure complex");
    std::map<Mask, int> count;
    for (Mask f : facet_masks(k))
        for (int i = 0; i < 64; ++i)
            if (f & (Mask{1} << i)) ++count[f & ~(Mask{1} << i)];
    std::vector<Mask> out;
    for (const auto& [m, c] : count)
        if (c == 1) out.push_back(m);
    return out;
}

}  // namespace

SimplicialComplex::SimplicialComplex(
    std::vector<Label> vertices, const std::vector<std::vector<Label>>& facets)
    : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex");
    std::set<std::vector<int>> uniq;
    for (const auto& f : facets) {
        std::vector<int> idx;
        for (const auto& v : f) {
            int i = index_of(v);
            if (i < 0) throw std::invalid_argument("facet uses unknown vertex");
            idx.push_back(i);
        }
        std::sort(idx.begin(), idx.end());
        if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
            throw std::invalid_argument("repeated vertex in facet");
        uniq.insert(std::move(idx));
    }
    for (const auto& f : uniq) {
        bool maximal = true;
        for (const auto& g : uniq)
            if (&g != &f && f.size() < g.size() &&
                std::includes(g.begin(), g.end(), f.begin(), f.end()))
                maximal = false;
        if (maximal) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());
}

std::vector<std::vector<SimplicialComplex::Label>>
SimplicialComplex::facet_labels() const {
    std::vector<std::vector<Label>> out;
    for (const auto& f : facets_) {
        std::vector<Label> lf;
        for (int i : f) lf.push_back(vertices_[i]);
        out.push_back(std::move(lf));
    }
    return out;
}

bool SimplicialComplex::is_pure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

int SimplicialComplex::dim() const {
    if (is_void()) return -2;
    std::size_t d = 0;
    for (const auto& f : facets_) d = std::max(d, f.size());
    return static_cast<int>(d) - 1;
}

int SimplicialComplex::index_of(const Label& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return -1;
    return static_cast<int>(it - vertices_.begin());
}

std::vector<SimplicialComplex::Label> cone_vertices(const SimplicialComplex& k) {
    std::vector<SimplicialComplex::Label> out;
    if (k.is_void()) return out;
    for (std::size_t i = 0; i < k.vertices().size(); ++i) {
        bool everywhere = true;
        for (const auto& f : k.facets())
            if (!std::binary_search(f.begin(), f.end(), static_cast<int>(i)))
                everywhere = false;
        if (everywhere) out.push_back(k.vertices()[i]);
    }
    return out;
}

SimplicialComplex restrict_to(
    const SimplicialComplex& k,
    const std::vector<SimplicialComplex::Label>& keep) {
    for (const auto& v : keep)
        if (k.index_of(v) < 0)
            throw std::invalid_argument("restriction vertex not in complex");
    std::set<SimplicialComplex::Label> s(keep.begin(), keep.end());
    std::vector<std::vector<SimplicialComplex::Label>> facets;
    for (const auto& f : k.facet_labels()) {
        std::vector<SimplicialComplex::Label> g;
        for (const auto& v : f)
            if (s.count(v)) g.push_back(v);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex(keep, facets);
}

SimplicialComplex core(const SimplicialComplex& k) {
    auto cone = cone_vertices(k);
    std::set<SimplicialComplex::Label> drop(cone.begin(), cone.end());
    std::vector<SimplicialComplex::Label> keep;
    for (const auto& v : k.vertices())
        if (!drop.count(v)) keep.push_back(v);
    return restrict_to(k, keep);
}

std::vector<std::vector<int>> all_faces(const SimplicialComplex& k) {
    std::vector<std::vector<int>> out;
    for (Mask m : face_masks(k)) out.push_back(mask_to_indices(m));
    return out;
}

std::vector<long long> f_vector(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    std::vector<long long> f(k.dim() + 2, 0);
    for (Mask m : face_masks(k)) ++f[std::popcount(m)];
    return f;
}

std::vector<long long> h_vector(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    auto f = f_vector(k);
    int d = k.dim() + 1;
    std::vector<long long> h(d + 1, 0);
    for (int kk = 0; kk <= d; ++kk)
        for (int i = 0; i <= kk; ++i)
            h[kk] += ((kk - i) % 2 ? -1 : 1) * binom(d - i, kk - i) * f[i];
    return h;
}

SimplicialComplex boundary_complex(const SimplicialComplex& k) {
    std::set<SimplicialComplex::Label> used;
    std::vector<std::vector<SimplicialComplex::Label>> facets;
    for (Mask m : boundary_ridges(k)) {
        std::vector<SimplicialComplex::Label> f;
        for (int i : mask_to_indices(m)) {
            f.push_back(k.vertices()[i]);
            used.insert(k.vertices()[i]);
        }
        facets.push_back(std::move(f));
    }
    return SimplicialComplex({used.begin(), used.end()}, facets);
}

std::vector<std::vector<int>> interior_faces(const SimplicialComplex& k) {
    auto ridges = boundary_ridges(k);
    std::vector<std::vector<int>> out;
    for (Mask m : face_masks(k)) {
        bool interior = true;
        for (Mask r : ridges)
            if ((m & ~r) == 0) interior = false;
        if (interior) out.push_back(mask_to_indices(m));
    }
    return out;
}

std::vector<long long> interior_f_vector(const SimplicialComplex& k) {
    if (k.is_void()) return {};
    std::vector<long long> g(k.dim() + 2, 0);
    for (const auto& f : interior_faces(k)) ++g[f.size()];
    return g;
}

bool interior_h_shift_identity(const SimplicialComplex& k) {
    if (k.is_void()) return true;
    auto h = h_vector(k);
    int d = k.dim() + 1;
    // coefficients of h(x+1)
    std::vector<long long> shifted(d + 1, 0);
    for (int kk = 0; kk <= d; ++kk)
        for (int j = 0; j <= kk; ++j) shifted[j] += h[kk] * binom(kk, j);
    auto g = interior_f_vector(k);
    for (int j = 0; j <= d; ++j)
        if (shifted[j] != g[d - j]) return false;
    return true;
}

SimplicialComplex link_complex(const SimplicialComplex& k,
                               const SimplicialComplex::Label& v) {
    int vi = k.index_of(v);
    if (vi < 0) throw std::invalid_argument("link vertex not in complex");
    std::set<SimplicialComplex::Label> used;
    std::vector<std::vector<SimplicialComplex::Label>> facets;
    for (const auto& f : k.facets()) {
        if (!std::binary_search(f.begin(), f.end(), vi)) continue;
        std::vector<SimplicialComplex::Label> g;
        for (int i : f)
            if (i != vi) {
                g.push_back(k.vertices()[i]);
                used.insert(k.vertices()[i]);
            }
        facets.push_back(std::move(g));
    }
    return SimplicialComplex({used.begin(), used.end()}, facets);
}

bool is_isomorphic_under(
    const SimplicialComplex& a, const SimplicialComplex& b,
    const std::map<SimplicialComplex::Label, SimplicialComplex::Label>& m) {
    if (a.vertices().size() != b.vertices().size()) return false;
    if (m.size() != a.vertices().size()) return false;
    std::set<std::vector<int>> image;
    for (const auto& f : a.facet_labels()) {
        std::vector<int> g;
        for (const auto& v : f) {
            auto it = m.find(v);
            if (it == m.end()) return false;
            int i = b.index_of(it->second);
            if (i < 0) return false;
            g.push_back(i);
        }
        std::sort(g.begin(), g.end());
        image.insert(std::move(g));
    }
    std::set<std::vector<int>> target(b.facets().begin(), b.facets().end());
    return image == target;
}

namespace {

// per-vertex invariant: sorted list of sizes of the facets through it
std::vector<std::vector<int>> vertex_profiles(const SimplicialComplex& k) {
    std::vector<std::vector<int>> p(k.vertices().size());
    for (const auto& f : k.facets())
        for (int i : f) p[i].push_back(static_cast<int>(f.size()));
    for (auto& v : p) std::sort(v.begin(), v.end());
    return p;
}

std::vector<std::vector<int>> cooccurrence(const SimplicialComplex& k) {
    int n = static_cast<int>(k.vertices().size());
    std::vector<std::vector<int>> co(n, std::vector<int>(n, 0));
    for (const auto& f : k.facets())
        for (int u : f)
            for (int v : f) ++co[u][v];
    return co;
}

bool iso_dfs(std::size_t i, std::vector<int>& asg, std::vector<bool>& used,
             const std::vector<std::vector<int>>& pa,
             const std::vector<std::vector<int>>& pb,
             const std::vector<std::vector<int>>& ca,
             const std::vector<std::vector<int>>& cb,
             const SimplicialComplex& a, const SimplicialComplex& b) {
    if (i == asg.size()) {
        std::set<std::vector<int>> image;
        for (const auto& f : a.facets()) {
            std::vector<int> g;
            for (int v : f) g.push_back(asg[v]);
            std::sort(g.begin(), g.end());
            image.insert(std::move(g));
        }
        return image ==
               std::set<std::vector<int>>(b.facets().begin(), b.facets().end());
    }
    for (int cand = 0; cand < static_cast<int>(used.size()); ++cand) {
        if (used[cand] || pa[i] != pb[cand]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j)
            if (ca[i][j] != cb[cand][asg[j]]) ok = false;
        if (!ok) continue;
        asg[i] = cand;
        used[cand] = true;
        if (iso_dfs(i + 1, asg, used, pa, pb, ca, cb, a, b)) return true;
        used[cand] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.vertices().size() != b.vertices().size()) return false;
    if (a.facets().size() != b.facets().size()) return false;
    std::vector<int> sa, sb;
    for (const auto& f : a.facets()) sa.push_back(static_cast<int>(f.size()));
    for (const auto& f : b.facets()) sb.push_back(static_cast<int>(f.size()));
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> asg(a.vertices().size(), -1);
    std::vector<bool> used(a.vertices().size(), false);
    return iso_dfs(0, asg, used, vertex_profiles(a), vertex_profiles(b),
                   cooccurrence(a), cooccurrence(b), a, b);
}

SimplicialComplex pipe_dream_complex(const Permutation& w) {
    std::vector<SimplicialComplex::Label> cells;
    for (int r = 1; r < w.size(); ++r)
        for (int c = 1; r + c <= w.size(); ++c) cells.push_back({r, c});
    std::vector<std::vector<SimplicialComplex::Label>> facets;
    for (const auto& d : enumerate_reduced(w)) {
        std::vector<SimplicialComplex::Label> f;
        for (const auto& cell : cells)
            if (!d.crosses.count(cell)) f.push_back(cell);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex(cells, facets);
}

}  // namespace pd
