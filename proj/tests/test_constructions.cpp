#include "zacyclic/constructions.hpp"
#include "zacyclic/homology.hpp"

#include <stdexcept>

#include <doctest.h>

using namespace zac;

TEST_CASE("dodecahedron cell counts") {
    auto P = dodecahedron();
    CHECK(P.vertices.size() == 20);
    CHECK(P.edges.size() == 30);
    CHECK(P.polygons.size() == 12);
    P.validate();
}

TEST_CASE("minimal-twist quotient collapses to 5 vertex classes") {
    auto q = weber_seifert_quotient(1);
    CHECK(q.vertex_count == 5);
    CHECK(q.edge_count == 10);
    CHECK(q.face_count == 6);
    CHECK(q.simple);
    // the quotient 1-skeleton is a complete graph on 5 vertices
    CHECK(q.skeleton.vertices.size() == 5);
    CHECK(q.skeleton.edges.size() == 10);
}

TEST_CASE("quotient boundary maps form a chain complex") {
    for (int twist : {1, 3, 5}) {
        auto q = weber_seifert_quotient(twist);
        CHECK((q.d1 * q.d2).is_zero());
    }
}

TEST_CASE("twist 3 gives the hyperbolic cell structure") {
    auto q = weber_seifert_quotient(3);
    CHECK(q.vertex_count == 1);
    CHECK(q.edge_count == 6);
    CHECK(q.face_count == 6);
    CHECK_FALSE(q.simple);
    auto h1 = homology_from_boundaries(q.d1, q.d2);
    CHECK(h1.rank == 0);
    CHECK(h1.torsion == std::vector<Int>{5, 5, 5});
}

TEST_CASE("twist 5 has 2-torsion") {
    auto q = weber_seifert_quotient(5);
    auto h1 = homology_from_boundaries(q.d1, q.d2);
    CHECK(h1.rank == 0);
    CHECK(h1.torsion == std::vector<Int>{2});
}

TEST_CASE("even twists do not map vertices to vertices") {
    CHECK_THROWS_WITH_AS(weber_seifert_quotient(2),
                         doctest::Contains("does not map vertices to vertices"),
                         std::invalid_argument);
    CHECK_THROWS_AS(weber_seifert_quotient(4), std::invalid_argument);
}

TEST_CASE("23-vertex complex f-vector") {
    auto K = the_23_vertex_complex();
    CHECK(K.f_vector() == std::vector<std::size_t>{23, 76, 54});
    CHECK(K.euler_characteristic() == 1);
    CHECK(K.has_vertex("A"));
    CHECK(K.has_vertex("W"));
}

TEST_CASE("shaded complex and the link of the apex") {
    auto S = shaded_complex();
    CHECK(S.f_vector() == std::vector<std::size_t>{22, 54, 30});
    CHECK_FALSE(S.has_vertex("A"));
    auto lk = link(the_23_vertex_complex(), "A");
    CHECK(lk.f_vector() == std::vector<std::size_t>{22, 24});
    CHECK(lk.dimension() == 1);
}

TEST_CASE("dunce hat: contractible but not collapsible") {
    auto D = dunce_hat();
    CHECK(D.euler_characteristic() == 1);
    CHECK(is_z_acyclic(D));
    CHECK(count_free_faces(D) == 0);
    CHECK_FALSE(greedy_collapse(D).collapsed_to_point);
}

TEST_CASE("cones over non-planar graphs collapse") {
    for (const char* g : {"K5", "K33"}) {
        auto C = cone_over_graph(g);
        CHECK(is_z_acyclic(C));
        CHECK(greedy_collapse(C, CollapseStrategy::ApexFirst, "apex").collapsed_to_point);
    }
    CHECK(cone_over_graph("K5").f_vector() == std::vector<std::size_t>{6, 15, 10});
    CHECK(cone_over_graph("K33").f_vector() == std::vector<std::size_t>{7, 15, 9});
    CHECK_THROWS(cone_over_graph("K4"));
}

TEST_CASE("free face counter") {
    CHECK(count_free_faces(make_complex({{"a", "b", "c"}})) == 3);
    CHECK(count_free_faces(make_complex({{"a", "b", "c"},
                                         {"a", "b", "d"},
                                         {"a", "c", "d"},
                                         {"b", "c", "d"}})) == 0);
}
