#pragma once

#include <gmpxx.h>

#include "zacyclic/simplicial_complex.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace zac {

using Rat = mpq_class;

struct Point {
    std::vector<Rat> coords;

    Point() = default;
    explicit Point(std::vector<Rat> c) : coords(std::move(c)) {}
    static Point integer(std::vector<long> c);

    int dim() const { return static_cast<int>(coords.size()); }
    const Rat& operator[](std::size_t i) const { return coords[i]; }
    Rat& operator[](std::size_t i) { return coords[i]; }
    auto operator<=>(const Point&) const = default;

    std::string to_string() const;
};

// Map from vertex labels to points of a common dimension.
struct Coordinates {
    int dim = 0;
    std::map<Label, Point> assignment;

    const Point& at(const Label& v) const;
};

// Sign of det(p1-p0, ..., pd-p0) for d+1 points in dimension d.
int orientation(const std::vector<Point>& points);

// 0..dim(pts)-1 affinely independent points.
struct GeomSimplex {
    std::vector<Point> points;

    explicit GeomSimplex(std::vector<Point> pts);  // verifies independence
    int ambient_dim() const { return points.empty() ? 0 : points[0].dim(); }
};

bool affinely_independent(const std::vector<Point>& points);

struct PairTestResult {
    bool ok = true;
    std::optional<Point> witness;  // a common point outside the shared face
};

// Decides conv(a) ∩ conv(b) == conv(shared vertices) by exact LP: over the
// common-point polytope, each non-shared barycentric coordinate must have
// maximum 0. `shared` lists index pairs (i in a, j in b) of coinciding
// vertices; pass std::nullopt to derive it from coordinate equality.
PairTestResult simplex_pair_test(
    const GeomSimplex& a, const GeomSimplex& b,
    std::optional<std::vector<std::pair<int, int>>> shared = std::nullopt);

struct EmbeddingReport {
    bool ok = true;
    std::size_t pairs_checked = 0;   // pairs examined (including box-filtered)
    std::size_t pairs_tested = 0;    // pairs that reached the LP
    std::optional<std::pair<Simplex, Simplex>> violation;  // lexicographically first
    std::optional<Point> witness;
    std::string error;  // non-empty on malformed input (missing coordinate, ...)
};

// Linear-realization check: every face affinely independent, and for every
// face pair conv ∩ conv = conv of shared vertices. An exact bounding-box
// prefilter may skip pairs with disjoint boxes.
EmbeddingReport verify_embedding(const SimplicialComplex& K, const Coordinates& coords,
                                 bool use_prefilter = true);

// Restricted variant for incremental search: only face pairs touching
// `fresh` vertices are tested (all faces must still be independent).
EmbeddingReport verify_embedding_incremental(const SimplicialComplex& K,
                                             const Coordinates& coords,
                                             const std::set<Label>& fresh,
                                             bool use_prefilter = true);

// Exact rational LP: maximize c·x subject to A x = b, x >= 0.
struct LPResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rat value;
    std::vector<Rat> solution;
};
LPResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c);

}  // namespace zac
