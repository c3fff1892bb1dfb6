#pragma once

#include "zacyclic/integer_matrix.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace zac {

// Complex with polygonal 2-cells, used for the dodecahedron and its
// face-identified quotient before triangulation.
struct PolyhedralComplex {
    std::vector<Label> vertices;
    std::set<std::pair<Label, Label>> edges;      // pairs with first < second
    std::vector<std::vector<Label>> polygons;     // cyclic label sequences

    void validate() const;  // throws on a broken invariant
};

// Combinatorial regular dodecahedron: 20 vertices v0..v19, 30 edges,
// 12 pentagons. Opposite faces are antipodal.
PolyhedralComplex dodecahedron();

// Quotient of the dodecahedron boundary by identifying each face with its
// opposite under the antipodal map composed with a rotation by
// twist * (2π/10). twist=1 gives the spherical (Poincaré) dodecahedral
// space, twist=3 the hyperbolic one.
struct CellQuotient {
    int twist = 0;
    std::size_t vertex_count = 0, edge_count = 0, face_count = 0;
    IntegerMatrix d1, d2;       // cellular boundary maps of the 2-skeleton
    bool simple = false;        // true iff each polygon has 5 distinct vertex
                                // classes and class pairs determine edges
    PolyhedralComplex skeleton; // populated iff simple; labels A, B, C, ...
};

CellQuotient weber_seifert_quotient(int twist);

// Fan-plus-strip subdivision of each pentagon: the cycle is rotated to
// start at `apex`, three interior vertices u1,u2,u3 are inserted, and the
// pentagon is replaced by 4 apex triangles and a strip of 5 triangles.
// Fresh labels are drawn from F, G, H, ... in canonical pentagon order.
SimplicialComplex subdivide_pentagons(const PolyhedralComplex& P, const Label& apex);

// The 23-vertex Z-acyclic non-contractible complex: subdivided 2-skeleton
// of the spherical dodecahedral space. f-vector (23, 76, 54).
SimplicialComplex the_23_vertex_complex();

// the_23_vertex_complex with the star of A removed. f-vector (22, 54, 30).
SimplicialComplex shaded_complex();

// Contractible but not collapsible; Z-acyclic with zero free faces.
SimplicialComplex dunce_hat();

// graph_name in {"K5", "K33"}.
SimplicialComplex cone_over_graph(const std::string& graph_name);

// Number of free faces (faces with exactly one proper coface, of dimension
// one higher).
std::size_t count_free_faces(const SimplicialComplex& K);

}  // namespace zac
