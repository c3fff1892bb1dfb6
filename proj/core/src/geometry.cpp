#include "zacyclic/geometry.hpp"

#include <algorithm>
#include <stdexcept>

namespace zac {

Point Point::integer(std::vector<long> c) {
    std::vector<Rat> r;
    r.reserve(c.size());
    for (long v : c) r.push_back(Rat(v));
    return Point(std::move(r));
}

std::string Point::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].get_str();
    }
    return s + ")";
}

const Point& Coordinates::at(const Label& v) const {
    auto it = assignment.find(v);
    if (it == assignment.end())
        throw std::invalid_argument("coordinates: no point for vertex " + v);
    return it->second;
}

namespace {

// Sign of a rational determinant, by Gaussian elimination.
int det_sign(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        if (m[k][k] < 0) {
            // track sign via pivot signs; normalize pivot positive
            sign = -sign;
            for (auto& x : m[k]) x = -x;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            Rat f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return sign;
}

}  // namespace

int orientation(const std::vector<Point>& points) {
    if (points.empty()) throw std::invalid_argument("orientation: no points");
    const int d = points[0].dim();
    if (static_cast<int>(points.size()) != d + 1)
        throw std::invalid_argument("orientation: need d+1 points in dimension d");
    for (const auto& p : points)
        if (p.dim() != d) throw std::invalid_argument("orientation: mixed dimensions");
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = points[i + 1][j] - points[0][j];
    return det_sign(std::move(m));
}

bool affinely_independent(const std::vector<Point>& points) {
    if (points.empty()) return false;
    const int d = points[0].dim();
    const int k = static_cast<int>(points.size()) - 1;
    if (k > d) return false;
    for (const auto& p : points)
        if (p.dim() != d) return false;
    // rank of the k x d difference matrix must be k
    std::vector<std::vector<Rat>> m(k, std::vector<Rat>(d));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = points[i + 1][j] - points[0][j];
    int rank = 0;
    for (int col = 0; col < d && rank < k; ++col) {
        int p = rank;
        while (p < k && m[p][col] == 0) ++p;
        if (p == k) continue;
        std::swap(m[p], m[rank]);
        for (int i = rank + 1; i < k; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (int j = col; j < d; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank == k;
}

GeomSimplex::GeomSimplex(std::vector<Point> pts) : points(std::move(pts)) {
    if (points.empty()) throw std::invalid_argument("geometric simplex: no points");
    if (!affinely_independent(points))
        throw std::invalid_argument("geometric simplex: points are affinely dependent");
}

// ---------------------------------------------------------------------------
// exact rational simplex method, Bland's rule

namespace {

struct Tableau {
    std::size_t m, n;                     // constraints, total variables
    std::vector<std::vector<Rat>> t;      // m x (n+1), RHS in last column
    std::vector<int> basis;               // m basic variable indices

    Rat basic_value(std::size_t i) const { return t[i][n]; }
};

// One simplex phase: maximize obj over the current feasible tableau.
// Columns with allow[j] == false never enter. Returns false if unbounded.
bool run_simplex(Tableau& tab, const std::vector<Rat>& obj, const std::vector<bool>& allow) {
    while (true) {
        // reduced costs via basic objective coefficients
        int enter = -1;
        for (std::size_t j = 0; j < tab.n; ++j) {
            if (!allow[j]) continue;
            bool basic = false;
            for (std::size_t i = 0; i < tab.m; ++i)
                if (tab.basis[i] == static_cast<int>(j)) { basic = true; break; }
            if (basic) continue;
            Rat rc = obj[j];
            for (std::size_t i = 0; i < tab.m; ++i)
                rc -= obj[tab.basis[i]] * tab.t[i][j];
            if (rc > 0) { enter = static_cast<int>(j); break; }  // Bland: smallest index
        }
        if (enter < 0) return true;  // optimal

        int leave = -1;
        Rat best_ratio;
        for (std::size_t i = 0; i < tab.m; ++i) {
            if (tab.t[i][enter] <= 0) continue;
            Rat ratio = tab.t[i][tab.n] / tab.t[i][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && tab.basis[i] < tab.basis[leave])) {
                leave = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        if (leave < 0) return false;  // unbounded

        // pivot
        Rat piv = tab.t[leave][enter];
        for (auto& x : tab.t[leave]) x /= piv;
        for (std::size_t i = 0; i < tab.m; ++i) {
            if (static_cast<int>(i) == leave || tab.t[i][enter] == 0) continue;
            Rat f = tab.t[i][enter];
            for (std::size_t j = 0; j <= tab.n; ++j) tab.t[i][j] -= f * tab.t[leave][j];
        }
        tab.basis[leave] = enter;
    }
}

}  // namespace

LPResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c) {
    const std::size_t m = A.size();
    const std::size_t n = m ? A[0].size() : c.size();

    Tableau tab;
    tab.m = m;
    tab.n = n + m;  // original + artificial
    tab.t.assign(m, std::vector<Rat>(tab.n + 1, Rat(0)));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = sign * A[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.n] = sign * b[i];
        tab.basis[i] = static_cast<int>(n + i);
    }

    // phase 1: drive artificials to zero
    std::vector<Rat> obj1(tab.n, Rat(0));
    for (std::size_t j = n; j < tab.n; ++j) obj1[j] = -1;
    std::vector<bool> allow(tab.n, true);
    if (!run_simplex(tab, obj1, allow))
        throw std::logic_error("solve_lp: phase 1 unbounded");
    Rat art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (tab.basis[i] >= static_cast<int>(n)) art_sum += tab.basic_value(i);
    if (art_sum != 0) return {LPResult::Status::Infeasible, Rat(0), {}};

    // pivot remaining zero-level artificials out, or drop redundant rows
    for (std::size_t i = 0; i < tab.m;) {
        if (tab.basis[i] < static_cast<int>(n)) { ++i; continue; }
        std::size_t j = 0;
        while (j < n) {
            if (tab.t[i][j] != 0) break;
            ++j;
        }
        if (j == n) {
            // redundant constraint
            tab.t.erase(tab.t.begin() + static_cast<long>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
            --tab.m;
            continue;
        }
        Rat piv = tab.t[i][j];
        for (auto& x : tab.t[i]) x /= piv;
        for (std::size_t r = 0; r < tab.m; ++r) {
            if (r == i || tab.t[r][j] == 0) continue;
            Rat f = tab.t[r][j];
            for (std::size_t col = 0; col <= tab.n; ++col) tab.t[r][col] -= f * tab.t[i][col];
        }
        tab.basis[i] = static_cast<int>(j);
        ++i;
    }

    // phase 2
    std::vector<Rat> obj2(tab.n, Rat(0));
    for (std::size_t j = 0; j < n; ++j) obj2[j] = c[j];
    for (std::size_t j = n; j < tab.n; ++j) allow[j] = false;
    if (!run_simplex(tab, obj2, allow)) return {LPResult::Status::Unbounded, Rat(0), {}};

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t i = 0; i < tab.m; ++i)
        if (tab.basis[i] < static_cast<int>(n)) x[tab.basis[i]] = tab.basic_value(i);
    Rat value = 0;
    for (std::size_t j = 0; j < n; ++j) value += c[j] * x[j];
    return {LPResult::Status::Optimal, value, std::move(x)};
}

// ---------------------------------------------------------------------------

PairTestResult simplex_pair_test(const GeomSimplex& a, const GeomSimplex& b,
                                 std::optional<std::vector<std::pair<int, int>>> shared_opt) {
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("simplex_pair_test: ambient dimension mismatch");
    const int d = a.ambient_dim();
    const int s = static_cast<int>(a.points.size());
    const int t = static_cast<int>(b.points.size());

    std::vector<std::pair<int, int>> shared;
    if (shared_opt) {
        shared = *shared_opt;
    } else {
        for (int i = 0; i < s; ++i)
            for (int j = 0; j < t; ++j)
                if (a.points[i] == b.points[j]) shared.push_back({i, j});
    }
    std::vector<bool> a_shared(s, false), b_shared(t, false);
    for (auto [i, j] : shared) {
        a_shared[i] = true;
        b_shared[j] = true;
    }

    // feasibility system: sum λ_i p_i - sum μ_j q_j = 0, sum λ = 1, sum μ = 1
    const std::size_t nvars = static_cast<std::size_t>(s + t);
    std::vector<std::vector<Rat>> A(static_cast<std::size_t>(d) + 2,
                                    std::vector<Rat>(nvars, Rat(0)));
    std::vector<Rat> rhs(static_cast<std::size_t>(d) + 2, Rat(0));
    for (int k = 0; k < d; ++k) {
        for (int i = 0; i < s; ++i) A[k][i] = a.points[i][k];
        for (int j = 0; j < t; ++j) A[k][s + j] = -b.points[j][k];
    }
    for (int i = 0; i < s; ++i) A[d][i] = 1;
    for (int j = 0; j < t; ++j) A[d + 1][s + j] = 1;
    rhs[d] = 1;
    rhs[d + 1] = 1;

    PairTestResult result;

    // cheap exact certificates of disjointness for vertex-disjoint pairs
    if (shared.empty() && d == 3) {
        auto strictly_separated_by_plane = [](const GeomSimplex& tri, const GeomSimplex& other) {
            if (tri.points.size() != 3) return false;
            int side = 0;
            for (const auto& p : other.points) {
                int o = orientation({tri.points[0], tri.points[1], tri.points[2], p});
                if (o == 0) return false;
                if (side == 0) side = o;
                if (o != side) return false;
            }
            return true;
        };
        if (strictly_separated_by_plane(a, b) || strictly_separated_by_plane(b, a))
            return result;  // ok
        if (a.points.size() == 2 && b.points.size() == 2) {
            // non-coplanar segments cannot meet
            if (orientation({a.points[0], a.points[1], b.points[0], b.points[1]}) != 0)
                return result;
        }
    }

    auto probe = [&](std::size_t var) -> bool {
        std::vector<Rat> c(nvars, Rat(0));
        c[var] = 1;
        auto lp = solve_lp(A, rhs, c);
        if (lp.status == LPResult::Status::Infeasible) return true;  // disjoint hulls
        if (lp.status != LPResult::Status::Optimal)
            throw std::logic_error("simplex_pair_test: unexpected LP status");
        if (lp.value > 0) {
            result.ok = false;
            std::vector<Rat> w(static_cast<std::size_t>(d), Rat(0));
            for (int i = 0; i < s; ++i)
                for (int k = 0; k < d; ++k) w[k] += lp.solution[i] * a.points[i][k];
            result.witness = Point(std::move(w));
            return false;
        }
        return true;
    };

    for (int i = 0; i < s && result.ok; ++i)
        if (!a_shared[i]) probe(static_cast<std::size_t>(i));
    for (int j = 0; j < t && result.ok; ++j)
        if (!b_shared[j]) probe(static_cast<std::size_t>(s + j));
    return result;
}

// ---------------------------------------------------------------------------

namespace {

struct Box {
    std::vector<Rat> lo, hi;
};

Box bounding_box(const Simplex& f, const Coordinates& coords) {
    Box b;
    const Point& first = coords.at(f[0]);
    b.lo = b.hi = first.coords;
    for (std::size_t i = 1; i < f.size(); ++i) {
        const Point& p = coords.at(f[i]);
        for (int k = 0; k < p.dim(); ++k) {
            if (p[k] < b.lo[k]) b.lo[k] = p[k];
            if (p[k] > b.hi[k]) b.hi[k] = p[k];
        }
    }
    return b;
}

bool boxes_intersect(const Box& a, const Box& b) {
    for (std::size_t k = 0; k < a.lo.size(); ++k)
        if (a.hi[k] < b.lo[k] || b.hi[k] < a.lo[k]) return false;
    return true;
}

EmbeddingReport verify_pairs(const SimplicialComplex& K, const Coordinates& coords,
                             const std::set<Label>* fresh, bool use_prefilter) {
    EmbeddingReport report;
    for (const auto& v : K.vertex_set()) {
        if (!coords.assignment.count(v)) {
            report.ok = false;
            report.error = "missing coordinate for vertex " + v;
            return report;
        }
        if (coords.at(v).dim() != coords.dim) {
            report.ok = false;
            report.error = "wrong-dimension coordinate for vertex " + v;
            return report;
        }
    }

    auto face_set = K.all_faces();
    std::vector<Simplex> faces(face_set.begin(), face_set.end());

    auto touches_fresh = [&](const Simplex& f) {
        if (!fresh) return true;
        for (const auto& v : f)
            if (fresh->count(v)) return true;
        return false;
    };

    std::vector<GeomSimplex> geom;
    std::vector<Box> boxes;
    geom.reserve(faces.size());
    for (const auto& f : faces) {
        std::vector<Point> pts;
        for (const auto& v : f) pts.push_back(coords.at(v));
        if (!affinely_independent(pts)) {
            report.ok = false;
            report.violation = {f, f};
            report.error = "affinely dependent face";
            return report;
        }
        geom.push_back(GeomSimplex(std::move(pts)));
        boxes.push_back(bounding_box(f, coords));
    }

    for (std::size_t i = 0; i < faces.size(); ++i) {
        for (std::size_t j = i + 1; j < faces.size(); ++j) {
            if (!touches_fresh(faces[i]) && !touches_fresh(faces[j])) continue;
            report.pairs_checked++;
            if (is_face_of(faces[i], faces[j]) || is_face_of(faces[j], faces[i])) continue;
            if (use_prefilter && !boxes_intersect(boxes[i], boxes[j])) continue;

            std::vector<std::pair<int, int>> shared;
            for (std::size_t a = 0; a < faces[i].size(); ++a)
                for (std::size_t b = 0; b < faces[j].size(); ++b)
                    if (faces[i][a] == faces[j][b])
                        shared.push_back({static_cast<int>(a), static_cast<int>(b)});

            report.pairs_tested++;
            auto r = simplex_pair_test(geom[i], geom[j], shared);
            if (!r.ok) {
                report.ok = false;
                report.violation = {faces[i], faces[j]};
                report.witness = r.witness;
                return report;
            }
        }
    }
    return report;
}

}  // namespace

EmbeddingReport verify_embedding(const SimplicialComplex& K, const Coordinates& coords,
                                 bool use_prefilter) {
    return verify_pairs(K, coords, nullptr, use_prefilter);
}

EmbeddingReport verify_embedding_incremental(const SimplicialComplex& K,
                                             const Coordinates& coords,
                                             const std::set<Label>& fresh, bool use_prefilter) {
    return verify_pairs(K, coords, &fresh, use_prefilter);
}

}  // namespace zac
