#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pd/pipedream.hpp"
#include "pd/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

using namespace pd;
using K = SimplicialComplex;
using Label = K::Label;

namespace {

Label V(int i) { return {i, 0}; }

K path3() { return K({V(1), V(2), V(3)}, {{V(1), V(2)}, {V(2), V(3)}}); }

K triangle_boundary() {
    return K({V(1), V(2), V(3)}, {{V(1), V(2)}, {V(2), V(3)}, {V(1), V(3)}});
}

}  // namespace

TEST_CASE("construction canonicalizes") {
    K k({V(2), V(1)}, {{V(1)}, {V(1), V(2)}, {V(2), V(1)}});
    CHECK(k.vertices() == std::vector<Label>{V(1), V(2)});
    REQUIRE(k.facets().size() == 1);  // {1} is swallowed, duplicates merged
    CHECK(k.facets()[0] == std::vector<int>{0, 1});
    CHECK(k.dim() == 1);
    CHECK_THROWS(K({V(1), V(1)}, {}));
    CHECK_THROWS(K({V(1)}, {{V(2)}}));
    CHECK_THROWS(K({V(1)}, {{V(1), V(1)}}));
}

TEST_CASE("void and empty complexes differ") {
    K void_k;
    K empty_k({}, {{}});
    CHECK(void_k.is_void());
    CHECK_FALSE(empty_k.is_void());
    CHECK(void_k.dim() == -2);
    CHECK(empty_k.dim() == -1);
    CHECK(f_vector(void_k).empty());
    CHECK(f_vector(empty_k) == std::vector<long long>{1});
    CHECK(h_vector(empty_k) == std::vector<long long>{1});
    CHECK_FALSE(void_k == empty_k);
}

TEST_CASE("f and h vectors") {
    K edge({V(1), V(2)}, {{V(1), V(2)}});
    CHECK(f_vector(edge) == std::vector<long long>{1, 2, 1});
    CHECK(h_vector(edge) == std::vector<long long>{1, 0, 0});
    CHECK(f_vector(path3()) == std::vector<long long>{1, 3, 2});
    CHECK(h_vector(path3()) == std::vector<long long>{1, 1, 0});
    CHECK(h_vector(triangle_boundary()) == std::vector<long long>{1, 1, 1});
    K two_points({V(1), V(2)}, {{V(1)}, {V(2)}});
    CHECK(h_vector(two_points) == std::vector<long long>{1, 1});
}

TEST_CASE("boundary complexes") {
    CHECK(boundary_complex(path3()) ==
          K({V(1), V(3)}, {{V(1)}, {V(3)}}));
    CHECK(boundary_complex(triangle_boundary()).is_void());
    K point({V(7)}, {{V(7)}});
    CHECK(boundary_complex(point) == K({}, {{}}));
    K two_points({V(1), V(2)}, {{V(1)}, {V(2)}});
    CHECK(boundary_complex(two_points).is_void());
    CHECK(boundary_complex(K({}, {{}})).is_void());
    K impure({V(1), V(2), V(3)}, {{V(1), V(2)}, {V(3)}});
    CHECK_THROWS(boundary_complex(impure));
}

TEST_CASE("interior faces of a path") {
    auto in = interior_faces(path3());
    // the middle vertex and both edges; the empty face touches the boundary
    CHECK(interior_f_vector(path3()) == std::vector<long long>{0, 1, 2});
    CHECK(in.size() == 3);
    CHECK(interior_h_shift_identity(path3()));
    CHECK(interior_h_shift_identity(triangle_boundary()));
    CHECK(interior_h_shift_identity(K({}, {{}})));
    CHECK(interior_f_vector(K({}, {{}})) == std::vector<long long>{1});
}

TEST_CASE("cone vertices, core, restrict") {
    K pd = pipe_dream_complex(Permutation({1, 3, 2}));
    CHECK(pd.vertices() == std::vector<Label>{{1, 1}, {1, 2}, {2, 1}});
    CHECK(cone_vertices(pd) == std::vector<Label>{{1, 1}});
    K c = core(pd);
    CHECK(c == K({{1, 2}, {2, 1}}, {{{1, 2}}, {{2, 1}}}));
    CHECK(h_vector(c) == std::vector<long long>{1, 1});
    // restriction keeps declared vertices even when they become isolated
    K r = restrict_to(path3(), {V(1), V(3)});
    CHECK(r.vertices() == std::vector<Label>{V(1), V(3)});
    CHECK(r == K({V(1), V(3)}, {{V(1)}, {V(3)}}));
    CHECK(restrict_to(path3(), {}) == K({}, {{}}));
    CHECK_THROWS(restrict_to(path3(), {V(9)}));
}

TEST_CASE("links") {
    CHECK(link_complex(path3(), V(2)) == K({V(1), V(3)}, {{V(1)}, {V(3)}}));
    CHECK(link_complex(path3(), V(1)) == K({V(2)}, {{V(2)}}));
    CHECK(link_complex(triangle_boundary(), V(1)) ==
          K({V(2), V(3)}, {{V(2)}, {V(3)}}));
    K with_isolated({V(1), V(2)}, {{V(1)}});
    CHECK(link_complex(with_isolated, V(2)).is_void());
    CHECK(link_complex(with_isolated, V(1)) == K({}, {{}}));
}

TEST_CASE("isomorphism") {
    K a({V(1), V(2), V(3)}, {{V(1), V(2)}, {V(2), V(3)}});
    K b({V(4), V(5), V(9)}, {{V(9), V(4)}, {V(4), V(5)}});
    CHECK(is_isomorphic(a, b));
    CHECK(is_isomorphic_under(a, b, {{V(1), V(9)}, {V(2), V(4)}, {V(3), V(5)}}));
    CHECK_FALSE(is_isomorphic_under(a, b, {{V(1), V(4)}, {V(2), V(9)}, {V(3), V(5)}}));
    CHECK_FALSE(is_isomorphic(a, triangle_boundary()));
    K filled({V(1), V(2), V(3)}, {{V(1), V(2), V(3)}});
    CHECK_FALSE(is_isomorphic(filled, triangle_boundary()));
    CHECK(is_isomorphic(K(), K()));
    CHECK(is_isomorphic(K({}, {{}}), K({}, {{}})));
    CHECK_FALSE(is_isomorphic(K(), K({}, {{}})));
    // same f-vector, different homeomorphism type: 4-cycle vs path of 4 edges
    // needs a fifth vertex to equalize counts, so compare cycle to a "Y" tree
    K four_cycle({V(1), V(2), V(3), V(4)},
                 {{V(1), V(2)}, {V(2), V(3)}, {V(3), V(4)}, {V(1), V(4)}});
    K star({V(1), V(2), V(3), V(4)},
           {{V(1), V(2)}, {V(1), V(3)}, {V(1), V(4)}});
    CHECK_FALSE(is_isomorphic(four_cycle, star));
}

TEST_CASE("pipe dream complex degenerate cases") {
    K longest = pipe_dream_complex(Permutation({4, 3, 2, 1}));
    CHECK(longest.vertices().size() == 6);
    CHECK(longest.dim() == -1);  // single empty facet
    CHECK(boundary_complex(longest).is_void());
    CHECK(interior_faces(longest).size() == 1);

    K id1 = pipe_dream_complex(Permutation({1}));
    CHECK(id1.vertices().empty());
    CHECK(id1.dim() == -1);

    K id4 = pipe_dream_complex(Permutation({1, 2, 3, 4}));
    CHECK(id4.facets().size() == 1);
    CHECK(core(id4).dim() == -1);
}

TEST_CASE("pipe dream complexes are pure of the expected dimension") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& w : all_permutations(n)) {
            K pd = pipe_dream_complex(w);
            CHECK(pd.is_pure());
            int cells = n * (n - 1) / 2;
            CHECK(pd.dim() == cells - w.length() - 1);
            CHECK(pd.facets().size() == enumerate_reduced(w).size());
        }
}

TEST_CASE("interior faces match the full pipe-dream search, all of S4") {
    for (const auto& w : all_permutations(4)) {
        K pd = pipe_dream_complex(w);
        std::set<std::set<Label>> expected;
        for (const auto& dc : enumerate_all_pipe_dreams(w)) {
            std::set<Label> face;
            for (const auto& v : pd.vertices())
                if (!dc.dream.crosses.count(v)) face.insert(v);
            expected.insert(std::move(face));
        }
        std::set<std::set<Label>> got;
        for (const auto& f : interior_faces(pd)) {
            std::set<Label> face;
            for (int i : f) face.insert(pd.vertices()[i]);
            got.insert(std::move(face));
        }
        CHECK(got == expected);
        CHECK(interior_h_shift_identity(pd));
    }
}
