#pragma once

#include "zacyclic/geometry.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <string>
#include <vector>

namespace zac {

// Complex file: one line `vertices: t1 t2 ...`, then one `facet: ti tj ...`
// line per facet. Blank lines ignored. Throws std::runtime_error on
// malformed input or facets using undeclared vertices.
SimplicialComplex read_complex(const std::string& text);
std::string write_complex(const SimplicialComplex& K);

// Coordinates file: line `dim: d`, then `<token>: n1 ... nd` per vertex,
// entries integers or `p/q` rationals.
Coordinates read_coordinates(const std::string& text);
std::string write_coordinates(const Coordinates& coords);

// A curve file is a coordinates file read in line order: the waypoints of
// a closed polygon (first token after the last one).
std::vector<Point> read_curve(const std::string& text);
std::string write_curve(const std::vector<Label>& waypoints, const Coordinates& coords);

// OFF export, dim 3 only: header `OFF`, counts `V F E`, one coordinate
// line per vertex (canonical label order), one `3 i j k` line per triangle.
std::string export_off(const SimplicialComplex& K, const Coordinates& coords);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace zac
