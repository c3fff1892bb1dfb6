#include "zacyclic/constructions.hpp"
#include "zacyclic/homology.hpp"
#include "zacyclic/presentation.hpp"

#include <doctest.h>

using namespace zac;

TEST_CASE("word reduction") {
    CHECK(free_reduce({1, -1, 2}) == Word{2});
    CHECK(free_reduce({1, 2, -2, -1}) == Word{});
    CHECK(cyclic_reduce({1, 2, -1}) == Word{2});
    CHECK(invert_word({1, 2, -3}) == Word{3, -2, -1});
}

TEST_CASE("edge-path presentation of a circle is Z") {
    auto C = make_complex({{"a", "b"}, {"a", "c"}, {"b", "c"}});
    auto p = edge_path_presentation(C, "a");
    CHECK(p.generators == 1);
    CHECK(p.relators.empty());
    CHECK(abelianization(p) == HomologyGroup{1, {}});
}

TEST_CASE("edge-path presentation of a sphere is trivial") {
    auto S = make_complex({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    auto p = edge_path_presentation(S, "a");
    auto t = tietze_simplify(p);
    CHECK_FALSE(t.budget_exceeded);
    CHECK(t.presentation.generators == 0);
}

TEST_CASE("tietze simplification preserves abelianization") {
    auto K = the_23_vertex_complex();
    auto p = edge_path_presentation(K, "A");
    CHECK(p.generators == 54);
    CHECK(p.relators.size() == 54);
    auto t = tietze_simplify(p);
    CHECK_FALSE(t.budget_exceeded);
    CHECK(t.presentation.generators <= 6);
    CHECK(abelianization(p) == abelianization(t.presentation));
    CHECK(abelianization(t.presentation).trivial());
}

TEST_CASE("permutations") {
    Permutation a({1, 2, 0});  // (1 2 3) in cycle notation
    CHECK(a.cycle_string() == "(1 2 3)");
    CHECK(a.compose(a.inverse()).is_identity());
    Permutation b({1, 0, 2});
    // compose is left-to-right application of the right factor first
    CHECK(a.compose(b).images == std::vector<int>{2, 1, 0});
    CHECK_THROWS(Permutation({0, 0, 1}));
}

TEST_CASE("alternating group sizes") {
    CHECK(alternating_group(3).elements().size() == 3);
    CHECK(alternating_group(4).elements().size() == 12);
    CHECK(alternating_group(5).elements().size() == 60);
}

TEST_CASE("cyclic group facts") {
    Presentation z5{1, {{1, 1, 1, 1, 1}}};
    CHECK(abelianization(z5) == HomologyGroup{0, {5}});
    auto res = coset_enumeration(z5);
    CHECK(res.completed);
    CHECK(res.order == 5);
    // Z/5 has no epimorphism onto A5
    CHECK_FALSE(find_epimorphism(z5, alternating_group(5)).has_value());
}

TEST_CASE("icosahedral presentation enumerates to order 60") {
    // <a,b | a^2, b^3, (ab)^5>
    Presentation p{2, {{1, 1}, {2, 2, 2}, {1, 2, 1, 2, 1, 2, 1, 2, 1, 2}}};
    auto res = coset_enumeration(p);
    CHECK(res.completed);
    CHECK(res.order == 60);
    auto epi = find_epimorphism(p, alternating_group(5));
    REQUIRE(epi.has_value());
    CHECK(verify_homomorphism(p, *epi));
}

TEST_CASE("fundamental group of the 23-vertex complex") {
    auto K = the_23_vertex_complex();
    auto p = tietze_simplify(edge_path_presentation(K, "A")).presentation;

    auto epi = find_epimorphism(p, alternating_group(5));
    REQUIRE(epi.has_value());
    CHECK(verify_homomorphism(p, *epi));

    auto res = coset_enumeration(p);
    CHECK(res.completed);
    CHECK(res.order == 120);
    CHECK(res.cosets_defined >= 120);
}

TEST_CASE("dunce hat group is trivial") {
    auto D = dunce_hat();
    auto p = tietze_simplify(edge_path_presentation(D, *D.vertex_set().begin())).presentation;
    CHECK(p.generators == 0);
    CHECK(p.relators.empty());
}

TEST_CASE("coset enumeration of the trivial presentation") {
    Presentation p{0, {}};
    auto res = coset_enumeration(p);
    CHECK(res.completed);
    CHECK(res.order == 1);
}
