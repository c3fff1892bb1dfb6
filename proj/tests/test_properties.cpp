#include "zacyclic/constructions.hpp"
#include "zacyclic/homology.hpp"
#include "zacyclic/presentation.hpp"
#include "zacyclic/simplicial_complex.hpp"

#include <doctest.h>

#include <random>

using namespace zac;

namespace {

constexpr int kCases = 120;

std::vector<Label> label_pool(int n) {
    std::vector<Label> v;
    for (int i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
    return v;
}

// random 2-complex on <= max_verts vertices
SimplicialComplex random_complex(std::mt19937& rng, int max_verts, int max_facets) {
    auto pool = label_pool(std::uniform_int_distribution<int>(3, max_verts)(rng));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> dim(1, 2);
    std::uniform_int_distribution<int> count(1, max_facets);
    std::vector<std::vector<Label>> facets;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        std::set<Label> f;
        int d = dim(rng);
        while (static_cast<int>(f.size()) < d + 1) f.insert(pool[pick(rng)]);
        facets.emplace_back(f.begin(), f.end());
    }
    return SimplicialComplex::from_facets(facets);
}

// random connected Z-acyclic 2-complex: a tree of triangles glued along
// existing edges, each with a fresh third vertex
SimplicialComplex random_contractible(std::mt19937& rng, int extra) {
    std::vector<std::vector<Label>> facets{{"v0", "v1", "v2"}};
    std::vector<std::pair<Label, Label>> edges{{"v0", "v1"}, {"v0", "v2"}, {"v1", "v2"}};
    int next = 3;
    for (int i = 0; i < extra; ++i) {
        auto [a, b] = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
        Label c = "v" + std::to_string(next++);
        facets.push_back({a, b, c});
        edges.emplace_back(a, c);
        edges.emplace_back(b, c);
    }
    return SimplicialComplex::from_facets(facets);
}

// random tree on n vertices (Prüfer-free: attach each new vertex to a
// uniformly chosen earlier one)
SimplicialComplex random_tree(std::mt19937& rng, int n) {
    std::vector<std::vector<Label>> edges;
    for (int i = 1; i < n; ++i) {
        int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
        edges.push_back({"v" + std::to_string(j), "v" + std::to_string(i)});
    }
    if (n == 1) edges.push_back({"v0"});
    return SimplicialComplex::from_facets(edges);
}

IntegerMatrix random_matrix(std::mt19937& rng, int max_dim, int max_entry) {
    std::uniform_int_distribution<int> dim(1, max_dim);
    std::uniform_int_distribution<int> entry(-max_entry, max_entry);
    IntegerMatrix A(dim(rng), dim(rng));
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = entry(rng);
    return A;
}

}  // namespace

TEST_CASE("boundary of boundary is zero") {
    std::mt19937 rng(20260826);
    for (int c = 0; c < kCases; ++c) {
        auto K = random_complex(rng, 10, 14);
        if (K.dimension() < 2) continue;
        auto d1 = boundary_matrix(K, 1);
        auto d2 = boundary_matrix(K, 2);
        CHECK((d1 * d2).is_zero());
    }
}

TEST_CASE("smith normal form contract") {
    std::mt19937 rng(7);
    for (int c = 0; c < kCases; ++c) {
        auto A = random_matrix(rng, 7, 9);
        auto snf = smith_normal_form(A);
        CHECK(snf.rank == snf.diagonal.size());
        CHECK(snf.rank == matrix_rank(A));
        // U and V unimodular
        CHECK(abs(determinant(snf.U)) == 1);
        CHECK(abs(determinant(snf.V)) == 1);
        // U*A*V is the diagonal
        auto S = snf.U * A * snf.V;
        for (std::size_t i = 0; i < S.rows(); ++i)
            for (std::size_t j = 0; j < S.cols(); ++j) {
                Int expect = (i == j && i < snf.rank) ? snf.diagonal[i] : Int(0);
                CHECK(S(i, j) == expect);
            }
        // positivity and divisibility chain
        for (std::size_t i = 0; i < snf.rank; ++i) {
            CHECK(snf.diagonal[i] > 0);
            if (i + 1 < snf.rank) CHECK(snf.diagonal[i + 1] % snf.diagonal[i] == 0);
        }
    }
}

TEST_CASE("abelianized edge-path group equals H1") {
    std::mt19937 rng(301);
    int done = 0;
    while (done < kCases) {
        auto K = random_complex(rng, 10, 12);
        if (!is_connected(K)) continue;
        ++done;
        auto p = edge_path_presentation(K, *K.vertex_set().begin());
        CHECK(abelianization(p) == homology(K, 1));
        // simplification preserves it
        auto t = tietze_simplify(p);
        CHECK(abelianization(t.presentation) == homology(K, 1));
    }
}

TEST_CASE("wedge and connected sum preserve Z-acyclicity") {
    std::mt19937 rng(99);
    for (int c = 0; c < kCases; ++c) {
        auto K1 = random_contractible(rng, 6);
        auto K2 = random_contractible(rng, 6);
        REQUIRE(is_z_acyclic(K1));
        REQUIRE(is_z_acyclic(K2));
        CHECK(is_z_acyclic(wedge(K1, K2, "v0", "v1")));
        auto t1 = *K1.faces(2).begin();
        auto t2 = *K2.faces(2).begin();
        CHECK(is_z_acyclic(connected_sum(K1, t1, K2, t2)));
    }
}

TEST_CASE("1-dimensional Z-acyclic complexes are trees and collapse") {
    std::mt19937 rng(4242);
    for (int c = 0; c < kCases; ++c) {
        int n = std::uniform_int_distribution<int>(1, 12)(rng);
        auto T = random_tree(rng, n);
        REQUIRE(is_z_acyclic(T));
        if (T.dimension() == 1) CHECK(is_tree(T));
        CHECK(greedy_collapse(T).collapsed_to_point);

        // and conversely: a random 1-complex that is Z-acyclic must be a tree
        auto K = random_complex(rng, 8, 6);
        if (K.dimension() == 1 && is_z_acyclic(K)) {
            CHECK(is_tree(K));
            CHECK(greedy_collapse(K).collapsed_to_point);
        }
    }
}
