#include "zacyclic/realization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace zac {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix r;
    r.n = n;
    for (int i = 0; i < n; ++i) r.m[i][i] = 1;
    return r;
}

IntMatrix IntMatrix::times(const IntMatrix& o) const {
    if (n != o.n) throw std::invalid_argument("matrix dimension mismatch");
    IntMatrix r;
    r.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int s = 0;
            for (int k = 0; k < n; ++k) s += m[i][k] * o.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Point IntMatrix::apply(const Point& p) const {
    if (p.dim() != n) throw std::invalid_argument("matrix/point dimension mismatch");
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != 0) out[i] += Rat(m[i][j]) * p[j];
    return Point(std::move(out));
}

std::vector<int> IntMatrix::apply_int(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != n)
        throw std::invalid_argument("matrix/vector dimension mismatch");
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
    return out;
}

bool IntMatrix::operator<(const IntMatrix& o) const {
    if (n != o.n) return n < o.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[i][j] != o.m[i][j]) return m[i][j] < o.m[i][j];
    return false;
}

std::vector<IntMatrix> tetrahedral_rotation_group(int dim) {
    if (dim != 3 && dim != 4) throw std::invalid_argument("dim must be 3 or 4");
    static const int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    static const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    std::vector<IntMatrix> out;
    for (const auto& p : perms)
        for (const auto& s : signs) {
            IntMatrix g;
            g.n = dim;
            for (int i = 0; i < 3; ++i) g.m[i][p[i]] = s[i];
            if (dim == 4) g.m[3][3] = 1;
            out.push_back(g);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Label>> SymmetryAction::orbits(const std::set<Label>& vertices) const {
    std::set<Label> remaining(vertices);
    std::vector<std::vector<Label>> out;
    while (!remaining.empty()) {
        Label seed = *remaining.begin();
        std::set<Label> orbit{seed};
        for (;;) {
            std::set<Label> next(orbit);
            for (const auto& [perm, mat] : elements)
                for (const auto& v : orbit) next.insert(perm.at(v));
            if (next == orbit) break;
            orbit = std::move(next);
        }
        std::vector<Label> o(orbit.begin(), orbit.end());
        for (const auto& v : o) remaining.erase(v);
        out.push_back(std::move(o));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    return out;
}

namespace {

// per-vertex combinatorial invariant: (degree, #incident triangles,
// sorted neighbor degrees)
std::map<Label, std::vector<int>> vertex_invariants(const SimplicialComplex& K) {
    auto adj = adjacency(K);
    std::map<Label, int> tri_count;
    for (const auto& t : K.faces(2))
        for (const auto& v : t) ++tri_count[v];
    std::map<Label, std::vector<int>> inv;
    for (const auto& [v, nbrs] : adj) {
        std::vector<int> key{static_cast<int>(nbrs.size()), tri_count[v]};
        std::vector<int> nd;
        for (const auto& u : nbrs) nd.push_back(static_cast<int>(adj[u].size()));
        std::sort(nd.begin(), nd.end());
        key.insert(key.end(), nd.begin(), nd.end());
        inv[v] = std::move(key);
    }
    return inv;
}

bool is_automorphism(const SimplicialComplex& K, const VertexPermutation& perm) {
    for (const auto& f : K.facets()) {
        std::vector<Label> img;
        for (const auto& v : f) img.push_back(perm.at(v));
        std::sort(img.begin(), img.end());
        if (!K.facets().count(img)) return false;
    }
    return true;
}

}  // namespace

std::vector<VertexPermutation> automorphism_group(const SimplicialComplex& K) {
    std::vector<Label> verts(K.vertex_set().begin(), K.vertex_set().end());
    auto adj = adjacency(K);
    auto inv = vertex_invariants(K);
    std::map<Label, std::set<Label>> nbr;
    for (const auto& [v, ns] : adj) nbr[v] = std::set<Label>(ns.begin(), ns.end());

    // assign rare invariant classes first
    std::map<std::vector<int>, int> class_size;
    for (const auto& [v, key] : inv) ++class_size[key];
    std::vector<Label> order(verts);
    std::stable_sort(order.begin(), order.end(), [&](const Label& a, const Label& b) {
        return class_size[inv[a]] < class_size[inv[b]];
    });

    std::vector<VertexPermutation> result;
    VertexPermutation partial;
    std::set<Label> used;

    auto consistent = [&](const Label& v, const Label& w) {
        if (inv[v] != inv[w]) return false;
        for (const auto& [a, b] : partial) {
            bool e1 = nbr[v].count(a) != 0;
            bool e2 = nbr[w].count(b) != 0;
            if (e1 != e2) return false;
        }
        return true;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == order.size()) {
            if (is_automorphism(K, partial)) result.push_back(partial);
            return;
        }
        const Label& v = order[i];
        for (const auto& w : verts) {
            if (used.count(w) || !consistent(v, w)) continue;
            partial[v] = w;
            used.insert(w);
            rec(i + 1);
            used.erase(w);
            partial.erase(v);
        }
    };
    rec(0);
    return result;
}

namespace {

bool even_on_four(const VertexPermutation& perm, const std::vector<Label>& four) {
    std::vector<int> img;
    for (const auto& v : four) {
        auto it = std::find(four.begin(), four.end(), perm.at(v));
        if (it == four.end()) return false;
        img.push_back(static_cast<int>(it - four.begin()));
    }
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (img[i] > img[j]) ++inversions;
    return inversions % 2 == 0;
}

}  // namespace

SymmetryAction match_action(const SimplicialComplex& K, std::optional<Label> fixed,
                            int matrix_dim) {
    const std::vector<Label> four{"B", "C", "D", "E"};
    for (const auto& v : four)
        if (!K.has_vertex(v)) throw std::runtime_error("vertices B,C,D,E required");

    // reference tetrahedron the matrices permute
    const std::map<Label, std::vector<int>> t{
        {"B", {1, 1, 1}}, {"C", {1, -1, -1}}, {"D", {-1, 1, -1}}, {"E", {-1, -1, 1}}};

    auto autos = automorphism_group(K);
    auto mats3 = tetrahedral_rotation_group(3);

    SymmetryAction action;
    for (const auto& g : autos) {
        if (fixed && g.at(*fixed) != *fixed) continue;
        if (!even_on_four(g, four)) continue;
        // locate the unique rotation realizing g on the tetrahedron
        const IntMatrix* match = nullptr;
        for (const auto& M : mats3) {
            bool ok = true;
            for (const auto& v : four)
                if (M.apply_int(t.at(v)) != t.at(g.at(v))) { ok = false; break; }
            if (ok) { match = &M; break; }
        }
        if (!match) continue;
        IntMatrix M = *match;
        if (matrix_dim == 4) {
            IntMatrix M4 = IntMatrix::identity(4);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) M4.m[i][j] = M.m[i][j];
            M4.m[3][3] = 1;
            M = M4;
        }
        action.elements.emplace_back(g, M);
    }

    if (action.elements.size() != 12)
        throw std::runtime_error("expected a symmetry group of order 12, found " +
                                 std::to_string(action.elements.size()));

    std::vector<VertexPermutation> perms;
    for (const auto& [g, M] : action.elements) perms.push_back(g);
    if (!verify_simplicial_action(K, perms))
        throw std::runtime_error("matched permutations do not form a simplicial action");
    return action;
}

namespace {

SimplicialComplex induced_subcomplex(const SimplicialComplex& K, const std::set<Label>& verts) {
    std::vector<std::vector<Label>> facets;
    for (const auto& f : K.facets()) {
        std::vector<Label> part;
        for (const auto& v : f)
            if (verts.count(v)) part.push_back(v);
        if (!part.empty()) facets.push_back(std::move(part));
    }
    return SimplicialComplex::from_facets(facets);
}

}  // namespace

std::optional<Coordinates> search_coordinates(const SimplicialComplex& K_shaded,
                                              const SymmetryAction& action, int box,
                                              std::uint64_t budget, SearchStats* stats) {
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    st = SearchStats{};

    auto orbits = action.orbits(K_shaded.vertex_set());

    // stabilizer matrices of each representative, then the fixed integer
    // points of the stabilizer inside the box, in lexicographic order
    struct Stage {
        std::vector<Label> orbit;
        Label rep;
        std::vector<std::vector<int>> candidates;
    };
    std::vector<Stage> stages;
    for (const auto& orbit : orbits) {
        Stage s;
        s.orbit = orbit;
        s.rep = orbit.front();
        std::vector<const IntMatrix*> stab;
        for (const auto& [g, M] : action.elements)
            if (g.at(s.rep) == s.rep) stab.push_back(&M);
        for (int x = -box; x <= box; ++x)
            for (int y = -box; y <= box; ++y)
                for (int z = -box; z <= box; ++z) {
                    std::vector<int> p{x, y, z};
                    bool fixed_pt = true;
                    for (const auto* M : stab)
                        if (M->apply_int(p) != p) { fixed_pt = false; break; }
                    if (fixed_pt) s.candidates.push_back(std::move(p));
                }
        stages.push_back(std::move(s));
    }

    Coordinates coords;
    coords.dim = 3;
    std::set<Label> placed;

    std::function<bool(std::size_t)> rec = [&](std::size_t si) -> bool {
        if (si == stages.size()) return true;
        const Stage& s = stages[si];
        for (const auto& cand : s.candidates) {
            if (st.nodes >= budget) { st.budget_exhausted = true; return false; }
            ++st.nodes;

            // propagate over the orbit; reject on inconsistency
            std::map<Label, Point> assigned;
            Point rep_pt = Point::integer({cand[0], cand[1], cand[2]});
            bool ok = true;
            for (const auto& [g, M] : action.elements) {
                Point img = M.apply(rep_pt);
                auto it = assigned.find(g.at(s.rep));
                if (it == assigned.end())
                    assigned.emplace(g.at(s.rep), img);
                else if (!(it->second == img)) { ok = false; break; }
            }
            if (ok && assigned.size() != s.orbit.size()) ok = false;
            if (ok) {
                // all points so far must stay distinct
                for (const auto& [v, p] : assigned) {
                    for (const auto& [w, q] : coords.assignment)
                        if (p == q) { ok = false; break; }
                    if (!ok) break;
                    for (const auto& [w, q] : assigned)
                        if (w < v && p == q) { ok = false; break; }
                    if (!ok) break;
                }
            }
            if (!ok) { ++st.rejected; continue; }

            for (const auto& [v, p] : assigned) {
                coords.assignment.emplace(v, p);
                placed.insert(v);
            }
            std::set<Label> fresh;
            for (const auto& [v, p] : assigned) fresh.insert(v);

            auto sub = induced_subcomplex(K_shaded, placed);
            auto report = verify_embedding_incremental(sub, coords, fresh);
            if (report.ok && report.error.empty()) {
                if (rec(si + 1)) return true;
                if (st.budget_exhausted) {
                    for (const auto& [v, p] : assigned) {
                        coords.assignment.erase(v);
                        placed.erase(v);
                    }
                    return false;
                }
            } else {
                ++st.rejected;
            }
            for (const auto& [v, p] : assigned) {
                coords.assignment.erase(v);
                placed.erase(v);
            }
        }
        return false;
    };

    if (!rec(0)) return std::nullopt;

    auto cert = verify_embedding(K_shaded, coords);
    if (!cert.ok || !cert.error.empty())
        throw std::runtime_error("search produced an assignment that fails certification");
    return coords;
}

Coordinates cone_realization(const SimplicialComplex& K_full, const Coordinates& coords3d,
                             const Label& apex, const Point& apex_point) {
    if (coords3d.dim != 3) throw std::invalid_argument("base coordinates must be 3-dimensional");
    if (apex_point.dim() != 4) throw std::invalid_argument("apex point must be 4-dimensional");
    Coordinates out;
    out.dim = 4;
    for (const auto& [v, p] : coords3d.assignment)
        out.assignment.emplace(v, Point({p[0], p[1], p[2], Rat(0)}));
    out.assignment.emplace(apex, apex_point);

    auto report = verify_embedding(K_full, out);
    if (!report.error.empty()) throw std::runtime_error("cone realization: " + report.error);
    if (!report.ok) {
        std::string msg = "cone realization fails embedding check";
        if (report.violation) {
            msg += ": ";
            for (const auto& v : report.violation->first) msg += v + " ";
            msg += "vs";
            for (const auto& v : report.violation->second) msg += " " + v;
        }
        throw std::runtime_error(msg);
    }
    return out;
}

bool is_equivariant(const Coordinates& coords, const SymmetryAction& action) {
    for (const auto& [g, M] : action.elements)
        for (const auto& [v, p] : coords.assignment) {
            auto it = g.find(v);
            if (it == g.end()) return false;
            auto img = coords.assignment.find(it->second);
            if (img == coords.assignment.end()) return false;
            if (!(img->second == M.apply(p))) return false;
        }
    return true;
}

}  // namespace zac
