#include "zacyclic/geometry.hpp"

#include <doctest.h>

using namespace zac;

namespace {

Point P(std::vector<long> v) { return Point::integer(std::move(v)); }

}  // namespace

TEST_CASE("orientation predicate") {
    CHECK(orientation({P({0, 0}), P({1, 0}), P({0, 1})}) == 1);
    CHECK(orientation({P({0, 0}), P({0, 1}), P({1, 0})}) == -1);
    CHECK(orientation({P({0, 0}), P({1, 1}), P({2, 2})}) == 0);
    CHECK(orientation({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0}), P({0, 0, 1})}) == 1);
}

TEST_CASE("affine independence") {
    CHECK(affinely_independent({P({0, 0, 0}), P({1, 0, 0}), P({0, 1, 0})}));
    CHECK_FALSE(affinely_independent({P({0, 0, 0}), P({1, 0, 0}), P({2, 0, 0})}));
    CHECK(affinely_independent({P({5, 5, 5})}));
    CHECK_THROWS(GeomSimplex({P({0, 0}), P({0, 0})}));
}

TEST_CASE("exact LP solves a small program") {
    // max x + y s.t. x + y + s = 1
    auto res = solve_lp({{Rat(1), Rat(1), Rat(1)}}, {Rat(1)}, {Rat(1), Rat(1), Rat(0)});
    CHECK(res.status == LPResult::Status::Optimal);
    CHECK(res.value == Rat(1));
    // infeasible: x + y = -1, x,y >= 0
    auto inf = solve_lp({{Rat(1), Rat(1)}}, {Rat(-1)}, {Rat(1), Rat(0)});
    CHECK(inf.status == LPResult::Status::Infeasible);
}

TEST_CASE("simplex pair test: disjoint, touching, crossing") {
    GeomSimplex t1({P({0, 0, 0}), P({4, 0, 0}), P({0, 4, 0})});
    GeomSimplex t2({P({0, 0, 1}), P({4, 0, 1}), P({0, 4, 1})});
    CHECK(simplex_pair_test(t1, t2).ok);  // parallel planes

    GeomSimplex shared({P({0, 0, 0}), P({4, 0, 0}), P({0, 0, 4})});
    CHECK(simplex_pair_test(t1, shared).ok);  // meet exactly in a shared edge

    GeomSimplex crossing({P({1, 1, -1}), P({1, 1, 1}), P({5, 5, 1})});
    auto bad = simplex_pair_test(t1, crossing);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.witness.has_value());
    // the witness lies in both hulls: its z must be 0 and inside t1
    CHECK((*bad.witness)[2] == Rat(0));
}

TEST_CASE("segments meeting at an interior point are rejected") {
    GeomSimplex s1({P({0, 0, 0}), P({2, 2, 0})});
    GeomSimplex s2({P({0, 2, 0}), P({2, 0, 0})});
    CHECK_FALSE(simplex_pair_test(s1, s2).ok);
    GeomSimplex s3({P({0, 2, 1}), P({2, 0, 1})});
    CHECK(simplex_pair_test(s1, s3).ok);
}

TEST_CASE("verify_embedding accepts a flat triangulated square") {
    auto K = make_complex({{"a", "b", "c"}, {"a", "c", "d"}});
    Coordinates coords;
    coords.dim = 3;
    coords.assignment = {{"a", P({0, 0, 0})},
                         {"b", P({1, 0, 0})},
                         {"c", P({1, 1, 0})},
                         {"d", P({0, 1, 0})}};
    auto rep = verify_embedding(K, coords);
    CHECK(rep.ok);
    CHECK(rep.error.empty());
    CHECK(rep.pairs_checked > 0);
}

TEST_CASE("verify_embedding finds an overlap") {
    auto K = make_complex({{"a", "b", "c"}, {"d", "e", "f"}});
    Coordinates coords;
    coords.dim = 3;
    coords.assignment = {{"a", P({0, 0, 0})}, {"b", P({4, 0, 0})}, {"c", P({0, 4, 0})},
                         {"d", P({1, 1, -1})}, {"e", P({1, 1, 1})}, {"f", P({5, 5, 1})}};
    auto rep = verify_embedding(K, coords);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.witness.has_value());
}

TEST_CASE("verify_embedding reports format problems") {
    auto K = make_complex({{"a", "b", "c"}});
    Coordinates coords;
    coords.dim = 3;
    coords.assignment = {{"a", P({0, 0, 0})}, {"b", P({1, 0, 0})}};
    auto rep = verify_embedding(K, coords);
    CHECK_FALSE(rep.error.empty());

    coords.assignment["b"] = P({1, 0});  // wrong arity
    coords.assignment["c"] = P({0, 1, 0});
    CHECK_FALSE(verify_embedding(K, coords).error.empty());

    // degenerate triangle: a genuine violation, not a format error
    coords.assignment = {{"a", P({0, 0, 0})}, {"b", P({1, 0, 0})}, {"c", P({2, 0, 0})}};
    auto degen = verify_embedding(K, coords);
    CHECK_FALSE(degen.ok);
}

TEST_CASE("rational coordinates are exact") {
    auto K = make_complex({{"a", "b"}, {"c", "d"}});
    Coordinates coords;
    coords.dim = 3;
    // two parallel segments one third apart
    coords.assignment = {{"a", Point({Rat(0), Rat(0), Rat(0)})},
                         {"b", Point({Rat(1), Rat(0), Rat(0)})},
                         {"c", Point({Rat(0), Rat(1, 3), Rat(0)})},
                         {"d", Point({Rat(1), Rat(1, 3), Rat(0)})}};
    CHECK(verify_embedding(K, coords).ok);
    coords.assignment["c"] = Point({Rat(0), Rat(0), Rat(0)});
    CHECK_FALSE(verify_embedding(K, coords).ok);
}
