#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace zac {

// Vertex labels are non-empty printable tokens without whitespace.
using Label = std::string;

// A simplex is a strictly increasing sequence of labels (lexicographic
// order on tokens). Equal simplices compare equal as vectors.
using Simplex = std::vector<Label>;

// Sorts and validates; throws std::invalid_argument on a repeated label.
Simplex make_simplex(std::vector<Label> vertices);

bool is_face_of(const Simplex& a, const Simplex& b);

// Finite abstract simplicial complex given by its facets (inclusion-maximal
// simplices). Immutable after construction.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Canonicalizes each facet and drops dominated ones.
    static SimplicialComplex from_facets(const std::vector<std::vector<Label>>& facets);

    const std::set<Simplex>& facets() const { return facets_; }
    const std::set<Label>& vertex_set() const { return vertices_; }
    bool has_vertex(const Label& v) const { return vertices_.count(v) != 0; }

    // -1 for the empty complex.
    int dimension() const;

    // Face counts (f0, f1, ..., f_dim). Empty for the empty complex.
    std::vector<std::size_t> f_vector() const;
    long euler_characteristic() const;

    // All k-faces in lexicographic order.
    std::vector<Simplex> faces(int k) const;
    // Every face of every dimension.
    std::set<Simplex> all_faces() const;

    bool contains(const Simplex& s) const;

    bool operator==(const SimplicialComplex& other) const { return facets_ == other.facets_; }

private:
    std::set<Simplex> facets_;
    std::set<Label> vertices_;
};

SimplicialComplex make_complex(const std::vector<std::vector<Label>>& facets);

SimplicialComplex star(const SimplicialComplex& K, const Label& v);
SimplicialComplex link(const SimplicialComplex& K, const Label& v);
SimplicialComplex remove_star(const SimplicialComplex& K, const Label& v);

// Facets become {apex} ∪ facet; apex must be a fresh label.
SimplicialComplex cone(const SimplicialComplex& K, const Label& apex);

// Identifies v1 with v2; labels of K2 clashing with K1 get a "'" suffix.
SimplicialComplex wedge(const SimplicialComplex& K1, const SimplicialComplex& K2,
                        const Label& v1, const Label& v2);

// Removes the open triangle t1 from K1 and glues ∂t1 to ∂t2 (sorted-order
// vertex bijection); the interior of t2 is kept.
SimplicialComplex connected_sum(const SimplicialComplex& K1, const Simplex& t1,
                                const SimplicialComplex& K2, const Simplex& t2);

enum class CollapseStrategy { Lexicographic, ApexFirst, Randomized };

struct CollapseStep {
    Simplex free_face;
    Simplex coface;
};

struct CollapseResult {
    SimplicialComplex complex;
    bool collapsed_to_point = false;
    std::vector<CollapseStep> log;
};

CollapseResult greedy_collapse(const SimplicialComplex& K,
                               CollapseStrategy strategy = CollapseStrategy::Lexicographic,
                               const Label& apex = {},
                               std::uint64_t seed = 0);

// dim(K) <= 1 required; true iff connected with f1 = f0 - 1.
bool is_tree(const SimplicialComplex& K);

bool is_connected(const SimplicialComplex& K);

using VertexPermutation = std::map<Label, Label>;

// True iff every permutation is a simplicial automorphism of K and the
// given set is closed under composition.
bool verify_simplicial_action(const SimplicialComplex& K,
                              const std::vector<VertexPermutation>& perms);

// 1-skeleton adjacency, lexicographic neighbor order.
std::map<Label, std::vector<Label>> adjacency(const SimplicialComplex& K);

}  // namespace zac
