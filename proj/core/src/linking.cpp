#include "zacyclic/linking.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zac {

namespace {

// orientation of the xy-projections of three points
int orient2(const Point& a, const Point& b, const Point& c) {
    Rat det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return det > 0 ? 1 : (det < 0 ? -1 : 0);
}

bool segments_disjoint(const Point& a0, const Point& a1, const Point& b0, const Point& b1,
                       std::optional<std::vector<std::pair<int, int>>> shared) {
    GeomSimplex s1({a0, a1}), s2({b0, b1});
    return simplex_pair_test(s1, s2, std::move(shared)).ok;
}

Point sheared(const Point& p, long k) {
    // unimodular, determinant +1, z untouched
    return Point({p[0] + k * p[2], p[1] + k * k * p[2], p[2]});
}

struct CrossingCount {
    bool degenerate = false;
    bool curves_touch = false;
    long lk = 0;
};

CrossingCount count_crossings(const std::vector<Point>& c1, const std::vector<Point>& c2) {
    CrossingCount out;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        const Point& a0 = c1[i];
        const Point& a1 = c1[(i + 1) % c1.size()];
        for (std::size_t j = 0; j < c2.size(); ++j) {
            const Point& b0 = c2[j];
            const Point& b1 = c2[(j + 1) % c2.size()];
            int o1 = orient2(a0, a1, b0);
            int o2 = orient2(a0, a1, b1);
            int o3 = orient2(b0, b1, a0);
            int o4 = orient2(b0, b1, a1);
            if (o1 * o2 < 0 && o3 * o4 < 0) {
                // transversal crossing of the projections
                Rat den = (a1[0] - a0[0]) * (b1[1] - b0[1]) - (a1[1] - a0[1]) * (b1[0] - b0[0]);
                Rat s = ((b0[0] - a0[0]) * (b1[1] - b0[1]) - (b0[1] - a0[1]) * (b1[0] - b0[0])) / den;
                Rat t = ((b0[0] - a0[0]) * (a1[1] - a0[1]) - (b0[1] - a0[1]) * (a1[0] - a0[0])) / den;
                Rat z1 = a0[2] + s * (a1[2] - a0[2]);
                Rat z2 = b0[2] + t * (b1[2] - b0[2]);
                if (z1 == z2) {
                    out.curves_touch = true;
                    return out;
                }
                if (z1 > z2) {
                    // first curve passes over; the sign is the orientation of
                    // (direction of c1, direction of c2) in the projection
                    Point d1({a1[0] - a0[0], a1[1] - a0[1], Rat(0)});
                    Point d2({b1[0] - b0[0], b1[1] - b0[1], Rat(0)});
                    Point origin({Rat(0), Rat(0), Rat(0)});
                    out.lk += orient2(origin, d1, d2);
                }
            } else if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) {
                // a zero orientation only matters if the projections touch
                auto touches = [&]() {
                    if ((o1 * o2 <= 0 && o3 * o4 <= 0)) {
                        // conservative: overlapping or endpoint contact possible
                        Rat alox = std::min(a0[0], a1[0]), ahix = std::max(a0[0], a1[0]);
                        Rat aloy = std::min(a0[1], a1[1]), ahiy = std::max(a0[1], a1[1]);
                        Rat blox = std::min(b0[0], b1[0]), bhix = std::max(b0[0], b1[0]);
                        Rat bloy = std::min(b0[1], b1[1]), bhiy = std::max(b0[1], b1[1]);
                        return !(ahix < blox || bhix < alox || ahiy < bloy || bhiy < aloy);
                    }
                    return false;
                };
                if (touches()) {
                    out.degenerate = true;
                    return out;
                }
            }
        }
    }
    return out;
}

}  // namespace

PolygonalCurve::PolygonalCurve(std::vector<Point> pts) : waypoints(std::move(pts)) {
    if (waypoints.size() < 3)
        throw std::invalid_argument("polygonal curve: need at least 3 waypoints");
    for (const auto& p : waypoints)
        if (p.dim() != 3) throw std::invalid_argument("polygonal curve: points must be 3D");
    const std::size_t n = waypoints.size();
    for (std::size_t i = 0; i < n; ++i)
        if (waypoints[i] == waypoints[(i + 1) % n])
            throw std::invalid_argument("polygonal curve: repeated consecutive waypoint");
    // simplicity: segment pairs meet only in shared endpoints
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::pair<int, int>> shared;
            if (j == i + 1) shared.push_back({1, 0});
            if (i == 0 && j == n - 1) shared.push_back({0, 1});
            if (!segments_disjoint(waypoints[i], waypoints[(i + 1) % n], waypoints[j],
                                   waypoints[(j + 1) % n], shared))
                throw std::invalid_argument("polygonal curve: not simple (self-intersection)");
        }
    }
}

long linking_number(const PolygonalCurve& c1, const PolygonalCurve& c2) {
    // exact disjointness check
    const auto& w1 = c1.waypoints;
    const auto& w2 = c2.waypoints;
    for (std::size_t i = 0; i < w1.size(); ++i)
        for (std::size_t j = 0; j < w2.size(); ++j)
            if (!segments_disjoint(w1[i], w1[(i + 1) % w1.size()], w2[j],
                                   w2[(j + 1) % w2.size()], std::nullopt))
                throw std::invalid_argument("linking_number: curves intersect");

    for (long k = 0; k <= 50; ++k) {
        std::vector<Point> s1, s2;
        for (const auto& p : w1) s1.push_back(k == 0 ? p : sheared(p, k));
        for (const auto& p : w2) s2.push_back(k == 0 ? p : sheared(p, k));
        auto count = count_crossings(s1, s2);
        if (count.curves_touch)
            throw std::logic_error("linking_number: curves touch despite disjointness check");
        if (!count.degenerate) return count.lk;
    }
    throw std::logic_error("linking_number: no generic projection found");
}

std::vector<std::vector<Label>> enumerate_simple_cycles(const SimplicialComplex& graph,
                                                        int max_len) {
    auto adj = adjacency(graph);
    std::vector<Label> verts(graph.vertex_set().begin(), graph.vertex_set().end());
    std::vector<std::vector<Label>> cycles;

    // canonical cycle: starts at its smallest vertex; second < last
    for (const auto& start : verts) {
        std::vector<Label> path{start};
        std::set<Label> on_path{start};
        std::function<void()> dfs = [&]() {
            if (static_cast<int>(path.size()) > max_len) return;
            const Label& v = path.back();
            for (const auto& w : adj[v]) {
                if (w == start && path.size() >= 3 && path[1] < path.back()) {
                    cycles.push_back(path);
                    continue;
                }
                if (w <= start || on_path.count(w)) continue;
                if (static_cast<int>(path.size()) + 1 > max_len) continue;
                path.push_back(w);
                on_path.insert(w);
                dfs();
                on_path.erase(w);
                path.pop_back();
            }
        };
        dfs();
    }
    std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.size(), std::cref(a)) < std::make_pair(b.size(), std::cref(b));
    });
    return cycles;
}

std::optional<LinkedPair> find_linked_cycle_pair(const SimplicialComplex& K,
                                                 const Coordinates& coords,
                                                 const std::set<Label>& side, int max_len) {
    auto realize = [&](const std::vector<Label>& cycle) {
        std::vector<Point> pts;
        for (const auto& v : cycle) pts.push_back(coords.at(v));
        return PolygonalCurve(std::move(pts));
    };

    std::vector<std::vector<Label>> side_edges;
    for (const auto& e : K.faces(1))
        if (side.count(e[0]) && side.count(e[1])) side_edges.push_back(e);
    if (side_edges.empty()) return std::nullopt;
    auto side_graph = SimplicialComplex::from_facets(side_edges);

    auto side_cycles = enumerate_simple_cycles(side_graph, max_len);
    for (const auto& c1 : side_cycles) {
        std::set<Label> used(c1.begin(), c1.end());
        // subgraph of K induced on the unused vertices
        std::vector<std::vector<Label>> edges;
        for (const auto& e : K.faces(1))
            if (!used.count(e[0]) && !used.count(e[1])) edges.push_back(e);
        if (edges.empty()) continue;
        auto rest = SimplicialComplex::from_facets(edges);
        auto curve1 = realize(c1);
        for (const auto& c2 : enumerate_simple_cycles(rest, max_len)) {
            auto curve2 = realize(c2);
            long lk = linking_number(curve1, curve2);
            if (lk != 0) return LinkedPair{c1, c2, lk};
        }
    }
    return std::nullopt;
}

}  // namespace zac
