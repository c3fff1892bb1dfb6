#include "zacyclic/simplicial_complex.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <stdexcept>

namespace zac {

Simplex make_simplex(std::vector<Label> vertices) {
    if (vertices.empty()) throw std::invalid_argument("simplex must be non-empty");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (vertices[i] == vertices[i + 1])
            throw std::invalid_argument("repeated label in simplex: " + vertices[i]);
    }
    for (const auto& v : vertices) {
        if (v.empty()) throw std::invalid_argument("empty vertex label");
    }
    return vertices;
}

bool is_face_of(const Simplex& a, const Simplex& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Label>>& facets) {
    std::set<Simplex> canon;
    for (const auto& f : facets) canon.insert(make_simplex(f));

    SimplicialComplex K;
    for (const auto& f : canon) {
        bool dominated = false;
        for (const auto& g : canon) {
            if (f != g && is_face_of(f, g)) { dominated = true; break; }
        }
        if (!dominated) K.facets_.insert(f);
    }
    for (const auto& f : K.facets_)
        for (const auto& v : f) K.vertices_.insert(v);
    return K;
}

SimplicialComplex make_complex(const std::vector<std::vector<Label>>& facets) {
    return SimplicialComplex::from_facets(facets);
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::set<Simplex> SimplicialComplex::all_faces() const {
    std::set<Simplex> out;
    for (const auto& f : facets_) {
        // enumerate non-empty subsets
        const std::size_t n = f.size();
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            Simplex s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) s.push_back(f[i]);
            out.insert(std::move(s));
        }
    }
    return out;
}

std::vector<Simplex> SimplicialComplex::faces(int k) const {
    std::vector<Simplex> out;
    if (k < 0) return out;
    for (const auto& s : all_faces())
        if (static_cast<int>(s.size()) == k + 1) out.push_back(s);
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    const int d = dimension();
    std::vector<std::size_t> f(static_cast<std::size_t>(d + 1), 0);
    for (const auto& s : all_faces()) f[s.size() - 1]++;
    return f;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    long sign = 1;
    for (std::size_t count : f_vector()) {
        chi += sign * static_cast<long>(count);
        sign = -sign;
    }
    return chi;
}

bool SimplicialComplex::contains(const Simplex& s) const {
    for (const auto& f : facets_)
        if (is_face_of(s, f)) return true;
    return false;
}

SimplicialComplex star(const SimplicialComplex& K, const Label& v) {
    if (!K.has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
    std::vector<std::vector<Label>> kept;
    for (const auto& f : K.facets())
        if (std::binary_search(f.begin(), f.end(), v)) kept.push_back(f);
    return SimplicialComplex::from_facets(kept);
}

SimplicialComplex link(const SimplicialComplex& K, const Label& v) {
    if (!K.has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
    std::vector<std::vector<Label>> kept;
    for (const auto& f : K.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) continue;
        if (f.size() == 1) continue;  // star of an isolated vertex: empty link
        Simplex g;
        for (const auto& w : f)
            if (w != v) g.push_back(w);
        kept.push_back(g);
    }
    return SimplicialComplex::from_facets(kept);
}

SimplicialComplex remove_star(const SimplicialComplex& K, const Label& v) {
    if (!K.has_vertex(v)) throw std::invalid_argument("unknown vertex: " + v);
    std::vector<std::vector<Label>> kept;
    for (const auto& f : K.facets()) {
        if (!std::binary_search(f.begin(), f.end(), v)) {
            kept.push_back(f);
            continue;
        }
        // keep the boundary faces avoiding v
        if (f.size() == 1) continue;
        Simplex g;
        for (const auto& w : f)
            if (w != v) g.push_back(w);
        kept.push_back(g);
    }
    return SimplicialComplex::from_facets(kept);
}

SimplicialComplex cone(const SimplicialComplex& K, const Label& apex) {
    if (K.has_vertex(apex)) throw std::invalid_argument("apex label collides: " + apex);
    std::vector<std::vector<Label>> facets;
    if (K.facets().empty()) {
        facets.push_back({apex});
    } else {
        for (const auto& f : K.facets()) {
            std::vector<Label> g = f;
            g.push_back(apex);
            facets.push_back(std::move(g));
        }
    }
    return SimplicialComplex::from_facets(facets);
}

namespace {

// Renames K2's vertices so they avoid `taken`, with explicit pins applied
// first. Clashes get "'" suffixes.
std::map<Label, Label> disjoint_relabeling(const SimplicialComplex& K2,
                                           const std::set<Label>& taken,
                                           const std::map<Label, Label>& pins) {
    std::map<Label, Label> rename;
    std::set<Label> used = taken;
    for (const auto& [from, to] : pins) {
        rename[from] = to;
        used.insert(to);
    }
    for (const auto& v : K2.vertex_set()) {
        if (rename.count(v)) continue;
        Label w = v;
        while (used.count(w)) w += "'";
        rename[v] = w;
        used.insert(w);
    }
    return rename;
}

std::vector<std::vector<Label>> relabel_facets(const SimplicialComplex& K,
                                               const std::map<Label, Label>& rename) {
    std::vector<std::vector<Label>> out;
    for (const auto& f : K.facets()) {
        std::vector<Label> g;
        for (const auto& v : f) g.push_back(rename.at(v));
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

SimplicialComplex wedge(const SimplicialComplex& K1, const SimplicialComplex& K2,
                        const Label& v1, const Label& v2) {
    if (!K1.has_vertex(v1)) throw std::invalid_argument("wedge: unknown vertex in K1: " + v1);
    if (!K2.has_vertex(v2)) throw std::invalid_argument("wedge: unknown vertex in K2: " + v2);
    auto rename = disjoint_relabeling(K2, K1.vertex_set(), {{v2, v1}});
    std::vector<std::vector<Label>> facets;
    for (const auto& f : K1.facets()) facets.push_back(f);
    for (auto& f : relabel_facets(K2, rename)) facets.push_back(std::move(f));
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex connected_sum(const SimplicialComplex& K1, const Simplex& t1,
                                const SimplicialComplex& K2, const Simplex& t2) {
    if (t1.size() != 3 || !K1.contains(t1))
        throw std::invalid_argument("connected_sum: t1 is not a 2-face of K1");
    if (t2.size() != 3 || !K2.contains(t2))
        throw std::invalid_argument("connected_sum: t2 is not a 2-face of K2");
    if (K1.dimension() != 2 || K2.dimension() != 2)
        throw std::invalid_argument("connected_sum: both complexes must be 2-dimensional");

    std::map<Label, Label> pins;
    for (std::size_t i = 0; i < 3; ++i) pins[t2[i]] = t1[i];
    auto rename = disjoint_relabeling(K2, K1.vertex_set(), pins);

    std::vector<std::vector<Label>> facets;
    for (const auto& f : K1.facets()) {
        if (f == t1) {
            // keep ∂t1, drop the open triangle
            facets.push_back({f[0], f[1]});
            facets.push_back({f[0], f[2]});
            facets.push_back({f[1], f[2]});
        } else {
            facets.push_back(f);
        }
    }
    for (auto& f : relabel_facets(K2, rename)) facets.push_back(std::move(f));
    return SimplicialComplex::from_facets(facets);
}

namespace {

struct FreePair {
    Simplex face;
    Simplex coface;
};

// Free faces of the complex spanned by `faces`: f with exactly one proper
// coface, which must have dimension dim(f)+1.
std::vector<FreePair> free_pairs(const std::set<Simplex>& faces) {
    std::vector<FreePair> out;
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
        if (cofaces == 1 && only->size() == f.size() + 1)
            out.push_back({f, *only});
    }
    return out;
}

}  // namespace

CollapseResult greedy_collapse(const SimplicialComplex& K, CollapseStrategy strategy,
                               const Label& apex, std::uint64_t seed) {
    std::set<Simplex> faces = K.all_faces();
    CollapseResult result;
    std::mt19937_64 rng(seed);

    while (true) {
        auto pairs = free_pairs(faces);
        if (pairs.empty()) break;

        std::size_t pick = 0;
        switch (strategy) {
            case CollapseStrategy::Lexicographic:
                for (std::size_t i = 1; i < pairs.size(); ++i) {
                    if (std::tie(pairs[i].face, pairs[i].coface) <
                        std::tie(pairs[pick].face, pairs[pick].coface))
                        pick = i;
                }
                break;
            case CollapseStrategy::ApexFirst: {
                auto key = [&](const FreePair& p) {
                    bool has_apex =
                        std::binary_search(p.coface.begin(), p.coface.end(), apex);
                    return std::make_tuple(!has_apex, p.face, p.coface);
                };
                for (std::size_t i = 1; i < pairs.size(); ++i)
                    if (key(pairs[i]) < key(pairs[pick])) pick = i;
                break;
            }
            case CollapseStrategy::Randomized:
                pick = std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng);
                break;
        }

        faces.erase(pairs[pick].face);
        faces.erase(pairs[pick].coface);
        result.log.push_back({pairs[pick].face, pairs[pick].coface});
    }

    // maximal remaining faces are the facets
    std::vector<std::vector<Label>> facets;
    for (const auto& f : faces) {
        bool maximal = true;
        for (const auto& g : faces)
            if (g != f && is_face_of(f, g)) { maximal = false; break; }
        if (maximal) facets.push_back(f);
    }
    result.complex = SimplicialComplex::from_facets(facets);
    result.collapsed_to_point =
        result.complex.facets().size() == 1 && result.complex.dimension() == 0;
    return result;
}

std::map<Label, std::vector<Label>> adjacency(const SimplicialComplex& K) {
    std::map<Label, std::set<Label>> adj;
    for (const auto& v : K.vertex_set()) adj[v];
    for (const auto& e : K.faces(1)) {
        adj[e[0]].insert(e[1]);
        adj[e[1]].insert(e[0]);
    }
    std::map<Label, std::vector<Label>> out;
    for (auto& [v, nb] : adj) out[v] = std::vector<Label>(nb.begin(), nb.end());
    return out;
}

bool is_connected(const SimplicialComplex& K) {
    if (K.vertex_set().empty()) return false;
    auto adj = adjacency(K);
    std::set<Label> seen;
    std::queue<Label> q;
    q.push(*K.vertex_set().begin());
    seen.insert(*K.vertex_set().begin());
    while (!q.empty()) {
        Label v = q.front();
        q.pop();
        for (const auto& w : adj[v])
            if (seen.insert(w).second) q.push(w);
    }
    return seen.size() == K.vertex_set().size();
}

bool is_tree(const SimplicialComplex& K) {
    if (K.dimension() > 1) throw std::invalid_argument("is_tree: complex has dimension > 1");
    if (K.vertex_set().empty()) return false;
    auto f = K.f_vector();
    std::size_t f1 = f.size() > 1 ? f[1] : 0;
    return is_connected(K) && f1 == f[0] - 1;
}

namespace {

VertexPermutation compose(const VertexPermutation& a, const VertexPermutation& b) {
    // (a ∘ b)(v) = a(b(v))
    VertexPermutation c;
    for (const auto& [v, w] : b) c[v] = a.at(w);
    return c;
}

}  // namespace

bool verify_simplicial_action(const SimplicialComplex& K,
                              const std::vector<VertexPermutation>& perms) {
    const auto& V = K.vertex_set();
    for (const auto& p : perms) {
        if (p.size() != V.size()) throw std::invalid_argument("permutation domain mismatch");
        std::set<Label> image;
        for (const auto& [v, w] : p) {
            if (!V.count(v) || !V.count(w))
                throw std::invalid_argument("permutation mentions unknown vertex");
            image.insert(w);
        }
        if (image.size() != V.size()) throw std::invalid_argument("permutation is not a bijection");
    }

    for (const auto& p : perms) {
        for (const auto& f : K.facets()) {
            std::vector<Label> img;
            for (const auto& v : f) img.push_back(p.at(v));
            if (!K.facets().count(make_simplex(img))) return false;
        }
    }
    // closure under composition
    std::set<VertexPermutation> have(perms.begin(), perms.end());
    for (const auto& a : perms)
        for (const auto& b : perms)
            if (!have.count(compose(a, b))) return false;
    return true;
}

}  // namespace zac
