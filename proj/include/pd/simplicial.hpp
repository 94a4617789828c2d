#pragma once

#include "pd/permutation.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace pd {

// Abstract simplicial complex over labelled vertices.  The declared vertex
// list is part of the data: a vertex may lie in no facet.  Two degenerate
// complexes are distinguished: the void complex has no faces at all, while
// the empty complex {*} has the single face *.
class SimplicialComplex {
public:
    using Label = Cell;

    // void complex
    SimplicialComplex() = default;

    // Facets are given by labels; they are deduplicated and reduced to the
    // inclusion-maximal ones.  An empty facet list yields the void complex.
    SimplicialComplex(std::vector<Label> vertices,
                      const std::vector<std::vector<Label>>& facets);

    const std::vector<Label>& vertices() const { return vertices_; }
    // sorted vertex-index lists, sorted lexicographically
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    std::vector<std::vector<Label>> facet_labels() const;

    bool is_void() const { return facets_.empty(); }
    bool is_pure() const;
    // dimension of the largest facet; -1 for {*}, -2 for the void complex
    int dim() const;
    int index_of(const Label& v) const;  // -1 if not a vertex

    friend bool operator==(const SimplicialComplex&,
                           const SimplicialComplex&) = default;

private:
    std::vector<Label> vertices_;
    std::vector<std::vector<int>> facets_;
};

// Vertices lying in every facet.
std::vector<SimplicialComplex::Label> cone_vertices(const SimplicialComplex& k);

// Restriction to a subset of the vertices: the new complex declares exactly
// the vertices of `keep` and its facets are the maximal intersections of old
// facets with `keep`.
SimplicialComplex restrict_to(const SimplicialComplex& k,
                              const std::vector<SimplicialComplex::Label>& keep);

// Restriction to the complement of the cone vertices.
SimplicialComplex core(const SimplicialComplex& k);

// Every face, as a sorted vertex-index list; the empty face is included
// whenever the complex is not void.  Requires at most 64 vertices.
std::vector<std::vector<int>> all_faces(const SimplicialComplex& k);

// (f_{-1}, f_0, ..., f_dim); empty for the void complex.
std::vector<long long> f_vector(const SimplicialComplex& k);

// (h_0, ..., h_d) with d = dim+1, from the f-vector by the usual alternating
// binomial sums; empty for the void complex.
std::vector<long long> h_vector(const SimplicialComplex& k);

// Subcomplex generated by the ridges lying in exactly one facet.  Requires a
// pure complex.  The result declares only the vertices it uses.
SimplicialComplex boundary_complex(const SimplicialComplex& k);

// Faces contained in no boundary face.
std::vector<std::vector<int>> interior_faces(const SimplicialComplex& k);

// Interior face counts (g_{-1}, g_0, ..., g_dim), same offset as f_vector.
std::vector<long long> interior_f_vector(const SimplicialComplex& k);

// Checks h(x+1) == sum_i g_{i} x^{dim-i} over interior face counts g.
bool interior_h_shift_identity(const SimplicialComplex& k);

// Facets through v with v removed, as a complex on the vertices they use;
// void if v lies in no facet.
SimplicialComplex link_complex(const SimplicialComplex& k,
                               const SimplicialComplex::Label& v);

// Does the given vertex bijection carry facets onto facets both ways?
bool is_isomorphic_under(
    const SimplicialComplex& a, const SimplicialComplex& b,
    const std::map<SimplicialComplex::Label, SimplicialComplex::Label>& m);

// Searches for some facet-preserving vertex bijection.
bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

// Complex on the staircase cells of S_n whose facets are the complements of
// the reduced pipe dreams of w.
SimplicialComplex pipe_dream_complex(const Permutation& w);

}  // namespace pd
