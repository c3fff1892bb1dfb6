#include "zacyclic/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

namespace zac {

void PolyhedralComplex::validate() const {
    std::set<Label> vs(vertices.begin(), vertices.end());
    if (vs.size() != vertices.size())
        throw std::invalid_argument("polyhedral complex: repeated vertex label");
    std::set<std::pair<Label, Label>> edges_on_polygons;
    for (const auto& poly : polygons) {
        if (poly.size() < 3) throw std::invalid_argument("polygon with fewer than 3 vertices");
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Label& a = poly[i];
            const Label& b = poly[(i + 1) % poly.size()];
            if (!vs.count(a)) throw std::invalid_argument("polygon uses unknown vertex " + a);
            auto e = std::minmax(a, b);
            if (!edges.count({e.first, e.second}))
                throw std::invalid_argument("polygon side is not an edge: " + a + "-" + b);
            edges_on_polygons.insert({e.first, e.second});
        }
    }
    for (const auto& e : edges)
        if (!edges_on_polygons.count(e))
            throw std::invalid_argument("edge on no polygon: " + e.first + "-" + e.second);
}

namespace {

struct Vec3 {
    double x, y, z;
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};
double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalize(const Vec3& a) { return a * (1.0 / norm(a)); }

struct DodecModel {
    std::vector<Vec3> verts;                      // 20
    std::vector<std::vector<int>> faces;          // 12 cyclic index lists
    std::vector<int> opposite;                    // face -> antipodal face
    std::vector<Vec3> centers;
};

DodecModel build_dodec_model() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double inv = 1.0 / phi;
    DodecModel m;
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0})
            for (double sz : {1.0, -1.0}) m.verts.push_back({sx, sy, sz});
    for (double sy : {1.0, -1.0})
        for (double sz : {1.0, -1.0}) m.verts.push_back({0.0, sy * inv, sz * phi});
    for (double sx : {1.0, -1.0})
        for (double sy : {1.0, -1.0}) m.verts.push_back({sx * inv, sy * phi, 0.0});
    for (double sx : {1.0, -1.0})
        for (double sz : {1.0, -1.0}) m.verts.push_back({sx * phi, 0.0, sz * inv});

    for (double s1 : {1.0, -1.0})
        for (double s2 : {1.0, -1.0}) {
            m.centers.push_back({s1, 0.0, s2 * phi});
            m.centers.push_back({0.0, s1 * phi, s2});
            m.centers.push_back({s1 * phi, s2, 0.0});
        }

    for (const Vec3& c : m.centers) {
        // 5 nearest vertices by dot product with the face normal
        std::vector<int> idx(m.verts.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return dot(m.verts[a], c) > dot(m.verts[b], c);
        });
        std::vector<int> face(idx.begin(), idx.begin() + 5);

        // cyclic order by angle in the face plane
        Vec3 n = normalize(c);
        Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 e1 = normalize(seed - n * dot(seed, n));
        Vec3 e2 = cross(n, e1);
        std::sort(face.begin(), face.end(), [&](int a, int b) {
            double aa = std::atan2(dot(m.verts[a], e2), dot(m.verts[a], e1));
            double ab = std::atan2(dot(m.verts[b], e2), dot(m.verts[b], e1));
            return aa < ab;
        });
        m.faces.push_back(face);
    }

    m.opposite.assign(12, -1);
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) {
            if (norm(m.centers[i] - (-m.centers[j])) < 1e-9) m.opposite[i] = j;
        }
    for (int i = 0; i < 12; ++i)
        if (m.opposite[i] < 0 || m.opposite[m.opposite[i]] != i)
            throw std::logic_error("dodecahedron: antipodal pairing failed");
    return m;
}

std::string padded_vertex_label(int i) {
    return i < 10 ? "v0" + std::to_string(i) : "v" + std::to_string(i);
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// The face-to-opposite-face gluing map for a given twist: vertex at angle α
// about the face axis goes to the opposite-face vertex at α + twist·36°.
std::vector<int> gluing_map(const DodecModel& m, int face, int twist) {
    const Vec3 n = normalize(m.centers[face]);
    Vec3 seed = std::abs(n.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    Vec3 e1 = normalize(seed - n * dot(seed, n));
    Vec3 e2 = cross(n, e1);
    auto angle = [&](int v) {
        return std::atan2(dot(m.verts[v], e2), dot(m.verts[v], e1));
    };
    const double step = M_PI / 5.0;
    const int opp = m.opposite[face];

    std::vector<int> map20(20, -1);
    for (int v : m.faces[face]) {
        double target = angle(v) + twist * step;
        int best = -1;
        for (int w : m.faces[opp]) {
            double diff = std::remainder(angle(w) - target, 2 * M_PI);
            if (std::abs(diff) < 1e-6) best = w;
        }
        if (best < 0)
            throw std::invalid_argument(
                "weber_seifert_quotient: twist " + std::to_string(twist) +
                " does not map vertices to vertices");
        map20[v] = best;
    }
    return map20;
}

}  // namespace

PolyhedralComplex dodecahedron() {
    DodecModel m = build_dodec_model();
    PolyhedralComplex P;
    for (int i = 0; i < 20; ++i) P.vertices.push_back(padded_vertex_label(i));
    for (const auto& f : m.faces) {
        std::vector<Label> poly;
        for (int v : f) poly.push_back(padded_vertex_label(v));
        for (std::size_t i = 0; i < 5; ++i) {
            auto e = std::minmax(poly[i], poly[(i + 1) % 5]);
            P.edges.insert({e.first, e.second});
        }
        P.polygons.push_back(std::move(poly));
    }
    P.validate();
    return P;
}

CellQuotient weber_seifert_quotient(int twist) {
    if (twist < 1 || twist > 5)
        throw std::invalid_argument("weber_seifert_quotient: twist must be in 1..5");
    DodecModel m = build_dodec_model();

    // directed edges of the dodecahedron graph
    std::map<std::pair<int, int>, int> dir_index;
    std::vector<std::pair<int, int>> dir_edges;
    for (const auto& f : m.faces)
        for (std::size_t i = 0; i < 5; ++i) {
            int a = f[i], b = f[(i + 1) % 5];
            for (auto e : {std::make_pair(a, b), std::make_pair(b, a)})
                if (!dir_index.count(e)) {
                    dir_index[e] = static_cast<int>(dir_edges.size());
                    dir_edges.push_back(e);
                }
        }
    if (dir_edges.size() != 60) throw std::logic_error("dodecahedron edge enumeration failed");

    UnionFind uf_v(20), uf_d(60);
    std::vector<std::pair<int, int>> face_pairs;
    for (int f = 0; f < 12; ++f) {
        if (m.opposite[f] < f) continue;
        face_pairs.push_back({f, m.opposite[f]});
        auto g = gluing_map(m, f, twist);
        for (int v : m.faces[f]) uf_v.unite(v, g[v]);
        for (std::size_t i = 0; i < 5; ++i) {
            int a = m.faces[f][i], b = m.faces[f][(i + 1) % 5];
            uf_d.unite(dir_index.at({a, b}), dir_index.at({g[a], g[b]}));
            uf_d.unite(dir_index.at({b, a}), dir_index.at({g[b], g[a]}));
        }
    }

    // undirected edge classes, with a representative direction each
    std::map<int, int> dir_class_to_edge;      // directed-orbit root -> edge class
    std::vector<std::pair<int, int>> edge_rep; // representative directed edge
    std::vector<int> dir_sign(60, 0);
    for (int d = 0; d < 60; ++d) {
        const auto& [a, b] = dir_edges[d];
        if (a > b) continue;
        int fwd = uf_d.find(d);
        int bwd = uf_d.find(dir_index.at({b, a}));
        if (fwd == bwd)
            throw std::invalid_argument(
                "weber_seifert_quotient: twist " + std::to_string(twist) +
                " identifies an edge with itself reversed (inconsistent orientation)");
        if (!dir_class_to_edge.count(fwd)) {
            int ec = static_cast<int>(edge_rep.size());
            dir_class_to_edge[fwd] = ec;
            dir_class_to_edge[bwd] = ec;
            edge_rep.push_back({a, b});
            // sign of every directed edge in these two orbits
        }
    }
    auto edge_class_of = [&](int a, int b) {
        return dir_class_to_edge.at(uf_d.find(dir_index.at({a, b})));
    };
    auto edge_sign_of = [&](int a, int b) {
        int ec = edge_class_of(a, b);
        const auto& [ra, rb] = edge_rep[ec];
        return uf_d.find(dir_index.at({a, b})) == uf_d.find(dir_index.at({ra, rb})) ? 1 : -1;
    };

    // vertex classes
    std::map<int, int> vroot_to_class;
    for (int v = 0; v < 20; ++v) {
        int r = uf_v.find(v);
        if (!vroot_to_class.count(r)) vroot_to_class[r] = static_cast<int>(vroot_to_class.size());
    }
    // deterministic class numbering: by smallest member
    {
        std::map<int, int> smallest;  // root -> min member
        for (int v = 0; v < 20; ++v) {
            int r = uf_v.find(v);
            if (!smallest.count(r) || v < smallest[r]) smallest[r] = v;
        }
        std::vector<std::pair<int, int>> order;  // (min member, root)
        for (auto& [r, mn] : smallest) order.push_back({mn, r});
        std::sort(order.begin(), order.end());
        vroot_to_class.clear();
        for (std::size_t i = 0; i < order.size(); ++i)
            vroot_to_class[order[i].second] = static_cast<int>(i);
    }
    auto vclass = [&](int v) { return vroot_to_class.at(uf_v.find(v)); };

    CellQuotient q;
    q.twist = twist;
    q.vertex_count = vroot_to_class.size();
    q.edge_count = edge_rep.size();
    q.face_count = face_pairs.size();

    q.d1 = IntegerMatrix(q.vertex_count, q.edge_count);
    for (std::size_t e = 0; e < edge_rep.size(); ++e) {
        auto [a, b] = edge_rep[e];
        q.d1(vclass(a), e) -= 1;
        q.d1(vclass(b), e) += 1;
    }
    q.d2 = IntegerMatrix(q.edge_count, q.face_count);
    for (std::size_t fc = 0; fc < face_pairs.size(); ++fc) {
        const auto& cycle = m.faces[face_pairs[fc].first];
        for (std::size_t i = 0; i < 5; ++i) {
            int a = cycle[i], b = cycle[(i + 1) % 5];
            q.d2(edge_class_of(a, b), fc) += edge_sign_of(a, b);
        }
    }
    if (!(q.d1 * q.d2).is_zero())
        throw std::logic_error("weber_seifert_quotient: boundary maps do not compose to zero");

    // simple skeleton (labels A, B, ...) when the quotient is vertex-simple
    q.simple = true;
    std::set<std::pair<int, int>> class_pairs;
    for (const auto& [a, b] : edge_rep) {
        int ca = vclass(a), cb = vclass(b);
        auto p = std::minmax(ca, cb);
        if (p.first == p.second || !class_pairs.insert(p).second) q.simple = false;
    }
    for (const auto& [f, opp] : face_pairs) {
        std::set<int> classes;
        for (int v : m.faces[f]) classes.insert(vclass(v));
        if (classes.size() != m.faces[f].size()) q.simple = false;
    }
    if (q.simple) {
        auto label_of = [&](int v) { return Label(1, static_cast<char>('A' + vclass(v))); };
        for (std::size_t i = 0; i < q.vertex_count; ++i)
            q.skeleton.vertices.push_back(Label(1, static_cast<char>('A' + i)));
        for (const auto& [a, b] : edge_rep) {
            Label la = label_of(a), lb = label_of(b);
            auto e = std::minmax(la, lb);
            q.skeleton.edges.insert({e.first, e.second});
        }
        for (const auto& [f, opp] : face_pairs) {
            std::vector<Label> poly;
            for (int v : m.faces[f]) poly.push_back(label_of(v));
            q.skeleton.polygons.push_back(std::move(poly));
        }
        q.skeleton.validate();
    }
    return q;
}

namespace {

// Lexicographically smallest rotation/reflection of a cyclic word.
std::vector<Label> canonical_cycle(const std::vector<Label>& w) {
    std::vector<Label> best;
    std::vector<Label> cur = w;
    for (int refl = 0; refl < 2; ++refl) {
        for (std::size_t r = 0; r < cur.size(); ++r) {
            std::vector<Label> cand;
            for (std::size_t i = 0; i < cur.size(); ++i)
                cand.push_back(cur[(r + i) % cur.size()]);
            if (best.empty() || cand < best) best = cand;
        }
        std::reverse(cur.begin(), cur.end());
    }
    return best;
}

std::vector<Label> fresh_label_supply(std::size_t n, const std::set<Label>& taken) {
    std::vector<Label> out;
    for (char c = 'F'; c <= 'Z' && out.size() < n; ++c)
        if (!taken.count(Label(1, c))) out.push_back(Label(1, c));
    for (int i = 1; out.size() < n; ++i) {
        Label l = "Z" + std::to_string(i);
        if (!taken.count(l)) out.push_back(l);
    }
    return out;
}

}  // namespace

SimplicialComplex subdivide_pentagons(const PolyhedralComplex& P, const Label& apex) {
    P.validate();
    std::vector<std::vector<Label>> pentagons;
    for (const auto& poly : P.polygons) {
        if (poly.size() != 5)
            throw std::invalid_argument("subdivide_pentagons: polygon is not a pentagon");
        if (std::find(poly.begin(), poly.end(), apex) == poly.end())
            throw std::invalid_argument("subdivide_pentagons: pentagon does not contain apex " +
                                        apex);
        pentagons.push_back(canonical_cycle(poly));
    }
    std::sort(pentagons.begin(), pentagons.end());

    std::set<Label> taken(P.vertices.begin(), P.vertices.end());
    auto supply = fresh_label_supply(3 * pentagons.size(), taken);

    std::vector<std::vector<Label>> triangles;
    std::size_t next_fresh = 0;
    for (const auto& pent : pentagons) {
        // rotate to start at the apex, then pick the lex-smaller direction
        std::size_t a = std::find(pent.begin(), pent.end(), apex) - pent.begin();
        std::vector<Label> fwd, bwd;
        for (std::size_t i = 1; i < 5; ++i) fwd.push_back(pent[(a + i) % 5]);
        for (std::size_t i = 1; i < 5; ++i) bwd.push_back(pent[(a + 5 - i) % 5]);
        const auto& v = fwd < bwd ? fwd : bwd;  // v[0..3] = v2, v3, v4, v5

        Label u1 = supply[next_fresh++];
        Label u2 = supply[next_fresh++];
        Label u3 = supply[next_fresh++];

        triangles.push_back({apex, v[0], u1});
        triangles.push_back({apex, u1, u2});
        triangles.push_back({apex, u2, u3});
        triangles.push_back({apex, u3, v[3]});
        triangles.push_back({u1, v[0], v[1]});
        triangles.push_back({u1, v[1], u2});
        triangles.push_back({u2, v[1], v[2]});
        triangles.push_back({u2, v[2], u3});
        triangles.push_back({u3, v[2], v[3]});
    }
    auto K = SimplicialComplex::from_facets(triangles);
    if (K.faces(2).size() != 9 * pentagons.size())
        throw std::logic_error("subdivide_pentagons: subdivision produced coincident triangles");
    return K;
}

SimplicialComplex the_23_vertex_complex() {
    auto q = weber_seifert_quotient(1);
    if (!q.simple)
        throw std::logic_error("the_23_vertex_complex: quotient is not vertex-simple");
    return subdivide_pentagons(q.skeleton, "A");
}

SimplicialComplex shaded_complex() { return remove_star(the_23_vertex_complex(), "A"); }

namespace {

// Disc with boundary q0..q8 (three arcs), `rings` concentric 9-vertex rings
// and a center vertex; boundary vertices carry their identified class label
// directly. The arc identification pattern is a·a·a^{-1}.
SimplicialComplex dunce_hat_with_rings(int rings) {
    static const int cls[9] = {0, 1, 2, 0, 1, 2, 0, 2, 1};
    auto boundary_label = [&](int i) { return "x" + std::to_string(cls[i]); };
    auto ring_label = [&](int ring, int i) {
        return "r" + std::to_string(ring) + "_" + std::to_string(i);
    };

    std::vector<std::vector<Label>> tris;
    auto outer = [&](int i) { return boundary_label(i); };
    for (int ring = 0; ring < rings; ++ring) {
        for (int i = 0; i < 9; ++i) {
            int j = (i + 1) % 9;
            Label oi = ring == 0 ? outer(i) : ring_label(ring - 1, i);
            Label oj = ring == 0 ? outer(j) : ring_label(ring - 1, j);
            tris.push_back({oi, oj, ring_label(ring, i)});
            tris.push_back({ring_label(ring, i), oj, ring_label(ring, j)});
        }
    }
    for (int i = 0; i < 9; ++i) {
        int j = (i + 1) % 9;
        tris.push_back({ring_label(rings - 1, i), ring_label(rings - 1, j), "c"});
    }

    // validate: identification must not create degenerate or coincident faces
    std::set<Simplex> seen;
    for (const auto& t : tris) {
        std::set<Label> u(t.begin(), t.end());
        if (u.size() != 3) return SimplicialComplex();
        if (!seen.insert(make_simplex(t)).second) return SimplicialComplex();
    }
    return SimplicialComplex::from_facets(tris);
}

}  // namespace

SimplicialComplex dunce_hat() {
    for (int rings = 1; rings <= 4; ++rings) {
        auto K = dunce_hat_with_rings(rings);
        if (!K.facets().empty()) return K;
    }
    throw std::logic_error("dunce_hat: construction failed to validate");
}

SimplicialComplex cone_over_graph(const std::string& graph_name) {
    std::vector<std::vector<Label>> edges;
    if (graph_name == "K5") {
        std::vector<Label> v = {"u1", "u2", "u3", "u4", "u5"};
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) edges.push_back({v[i], v[j]});
    } else if (graph_name == "K33") {
        for (const Label& a : {"a1", "a2", "a3"})
            for (const Label& b : {"b1", "b2", "b3"}) edges.push_back({a, b});
    } else {
        throw std::invalid_argument("cone_over_graph: unknown graph " + graph_name);
    }
    return cone(SimplicialComplex::from_facets(edges), "apex");
}

std::size_t count_free_faces(const SimplicialComplex& K) {
    auto faces = K.all_faces();
    std::size_t count = 0;
    for (const auto& f : faces) {
        const Simplex* only = nullptr;
        int cofaces = 0;
        for (const auto& g : faces) {
            if (g.size() > f.size() && is_face_of(f, g)) {
                ++cofaces;
                only = &g;
                if (cofaces > 1) break;
            }
        }
        if (cofaces == 1 && only->size() == f.size() + 1) ++count;
    }
    return count;
}

}  // namespace zac
