#pragma once

#include "zacyclic/geometry.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace zac {

// Small square integer matrix (dimension 3 or 4).
struct IntMatrix {
    int n = 0;
    std::array<std::array<int, 4>, 4> m{};

    static IntMatrix identity(int n);
    IntMatrix times(const IntMatrix& o) const;
    Point apply(const Point& p) const;
    std::vector<int> apply_int(const std::vector<int>& v) const;
    bool operator==(const IntMatrix&) const = default;
    bool operator<(const IntMatrix& o) const;
};

// The 12 rotation matrices of the standard tetrahedron
// {(1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1)}: even permutations of the
// first three axes times even sign changes. dim 4 fixes the last axis.
std::vector<IntMatrix> tetrahedral_rotation_group(int dim);

struct SymmetryAction {
    std::vector<std::pair<VertexPermutation, IntMatrix>> elements;  // order 12

    std::vector<std::vector<Label>> orbits(const std::set<Label>& vertices) const;
};

// Finds the order-12 subgroup of Aut(K) fixing `fixed` (when given) that
// acts on {B,C,D,E} as the even permutations, paired with the rotation
// matrices so that composition is respected.
SymmetryAction match_action(const SimplicialComplex& K, std::optional<Label> fixed,
                            int matrix_dim = 3);

// All simplicial automorphisms of K (backtracking with invariant pruning).
std::vector<VertexPermutation> automorphism_group(const SimplicialComplex& K);

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t rejected = 0;
    bool budget_exhausted = false;
};

// Backtracking over orbit representatives: each representative is
// restricted to the integer points of its stabilizer's fixed subspace
// inside [-box, box]^3; the rest of the orbit follows by equivariance.
// Every candidate is screened by incremental embedding checks and the
// returned assignment carries a full verify_embedding certificate.
std::optional<Coordinates> search_coordinates(const SimplicialComplex& K_shaded,
                                              const SymmetryAction& action, int box,
                                              std::uint64_t budget = 50'000'000,
                                              SearchStats* stats = nullptr);

// Places the 3D model in the hyperplane x4 = 0 and the apex at apex_point
// (default (0,0,0,1)); verifies the full complex and throws on failure.
Coordinates cone_realization(const SimplicialComplex& K_full, const Coordinates& coords3d,
                             const Label& apex,
                             const Point& apex_point = Point::integer({0, 0, 0, 1}));

// Equivariance check: assignment(g·v) == matrix_g · assignment(v).
bool is_equivariant(const Coordinates& coords, const SymmetryAction& action);

}  // namespace zac
