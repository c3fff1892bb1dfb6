#pragma once

#include "zacyclic/integer_matrix.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <string>
#include <vector>

namespace zac {

struct HomologyGroup {
    std::size_t rank = 0;
    std::vector<Int> torsion;  // entries > 1, divisibility chain

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
    std::string to_string() const;  // e.g. "Z^2 + Z/5"
};

// ∂k: rows = (k-1)-faces, cols = k-faces, lexicographic order; the sign of
// dropping the i-th vertex is (-1)^i. Requires 1 <= k <= dim(K).
IntegerMatrix boundary_matrix(const SimplicialComplex& K, int k);

// H_k = ker ∂k / im ∂(k+1) for a chain complex given by consecutive
// boundary maps; dk may be the 0 x n_k zero map (k = 0), dk1 the
// n_k x 0 zero map (top dimension).
HomologyGroup homology_from_boundaries(const IntegerMatrix& dk, const IntegerMatrix& dk1);

// Unreduced H_k(K; Z).
HomologyGroup homology(const SimplicialComplex& K, int k);

// Reduced homology in degrees 0..dim(K).
std::vector<HomologyGroup> reduced_homology_all(const SimplicialComplex& K);

bool is_z_acyclic(const SimplicialComplex& K);

}  // namespace zac
