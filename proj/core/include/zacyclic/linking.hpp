#pragma once

#include "zacyclic/geometry.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <optional>
#include <vector>

namespace zac {

// Simple closed polygonal curve in R^3 (>= 3 waypoints, cyclic).
struct PolygonalCurve {
    std::vector<Point> waypoints;

    explicit PolygonalCurve(std::vector<Point> pts);  // verifies simplicity
    std::size_t size() const { return waypoints.size(); }
};

// Signed-crossing linking number of two disjoint curves; exact. Degenerate
// projections are resolved by a fixed sequence of unimodular shears.
// Throws if the curves intersect.
long linking_number(const PolygonalCurve& c1, const PolygonalCurve& c2);

struct LinkedPair {
    std::vector<Label> cycle1, cycle2;  // closed vertex sequences
    long lk = 0;
};

// Searches for a pair of vertex-disjoint simple cycles with non-zero
// linking number: cycle1 in the subgraph of K's 1-skeleton induced on
// `side` (e.g. the vertices of the link of a removed vertex), cycle2 in
// the subgraph induced on the vertices not used by cycle1. Cycles are
// enumerated in deterministic order up to length max_len.
std::optional<LinkedPair> find_linked_cycle_pair(const SimplicialComplex& K,
                                                 const Coordinates& coords,
                                                 const std::set<Label>& side,
                                                 int max_len);

// Simple cycles of the 1-skeleton, each starting at its smallest vertex,
// deterministic order, length <= max_len.
std::vector<std::vector<Label>> enumerate_simple_cycles(const SimplicialComplex& graph,
                                                        int max_len);

}  // namespace zac
