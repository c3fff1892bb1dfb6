#include "zacyclic/constructions.hpp"
#include "zacyclic/linking.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>

using namespace zac;

namespace {

Point P(std::vector<long> v) { return Point::integer(std::move(v)); }

PolygonalCurve square_xy(long z) {
    return PolygonalCurve({P({2, 2, z}), P({-2, 2, z}), P({-2, -2, z}), P({2, -2, z})});
}

// rectangle in the xz-plane threading the z=0 square through its interior
PolygonalCurve hopf_partner() {
    return PolygonalCurve({P({0, 0, -1}), P({4, 0, -1}), P({4, 0, 1}), P({0, 0, 1})});
}

}  // namespace

TEST_CASE("curve validation") {
    CHECK_THROWS(PolygonalCurve({P({0, 0, 0}), P({1, 0, 0})}));
    CHECK_THROWS(PolygonalCurve({P({0, 0, 0}), P({0, 0, 0}), P({1, 0, 0})}));
    // self-crossing bowtie
    CHECK_THROWS(PolygonalCurve(
        {P({0, 0, 0}), P({2, 2, 0}), P({2, 0, 0}), P({0, 2, 0})}));
}

TEST_CASE("hopf pair links once") {
    auto lk = linking_number(square_xy(0), hopf_partner());
    CHECK(std::abs(lk) == 1);
    // orientation reversal flips the sign
    auto rev = hopf_partner();
    std::reverse(rev.waypoints.begin(), rev.waypoints.end());
    CHECK(linking_number(square_xy(0), PolygonalCurve(rev.waypoints)) == -lk);
}

TEST_CASE("split pair has linking number zero") {
    CHECK(linking_number(square_xy(0), square_xy(5)) == 0);
    // unlinked but interleaved in z
    PolygonalCurve far({P({10, 0, -1}), P({14, 0, -1}), P({14, 0, 1}), P({10, 0, 1})});
    CHECK(linking_number(square_xy(0), far) == 0);
}

TEST_CASE("intersecting curves are rejected") {
    // this edge passes through (2,2,0), a vertex of the square
    PolygonalCurve through({P({2, 2, -1}), P({5, 2, -1}), P({5, 2, 1}), P({2, 2, 1})});
    CHECK_THROWS(linking_number(square_xy(0), through));
    // a diagonal threading the square's spanning disk without touching the
    // curve still links
    PolygonalCurve thread({P({0, 0, -1}), P({4, 4, -1}), P({4, 4, 1}), P({0, 0, 1})});
    CHECK(std::abs(linking_number(square_xy(0), thread)) == 1);
}

TEST_CASE("degenerate projection falls back to a shear") {
    // both curves in the xz-plane: the xy-projection is a segment
    PolygonalCurve a({P({0, 0, 0}), P({2, 0, 0}), P({2, 0, 2}), P({0, 0, 2})});
    PolygonalCurve b({P({5, 0, 0}), P({7, 0, 0}), P({7, 0, 2}), P({5, 0, 2})});
    CHECK(linking_number(a, b) == 0);
    PolygonalCurve c({P({1, -1, 1}), P({3, -1, 1}), P({3, 1, 1}), P({1, 1, 1})});
    CHECK(std::abs(linking_number(a, c)) == 1);
}

TEST_CASE("cycle enumeration is canonical") {
    auto K4 = make_complex({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
    auto cycles = enumerate_simple_cycles(K4, 4);
    CHECK(cycles.size() == 7);  // 4 triangles + 3 squares
    CHECK(cycles.front() == std::vector<Label>{"a", "b", "c"});
    for (const auto& c : cycles) {
        CHECK(c.front() == *std::min_element(c.begin(), c.end()));
        CHECK(c[1] < c.back());
    }
}

TEST_CASE("no linked pair in a flat embedding") {
    auto K = make_complex({{"a", "b", "c"}, {"a", "c", "d"}, {"a", "b", "d"}});
    Coordinates coords;
    coords.dim = 3;
    coords.assignment = {{"a", P({0, 0, 0})},
                         {"b", P({4, 0, 0})},
                         {"c", P({0, 4, 0})},
                         {"d", P({-4, -4, 0})}};
    CHECK_FALSE(find_linked_cycle_pair(K, coords, {"b", "c", "d"}, 6).has_value());
}

TEST_CASE("hopf-positioned triangles split across the side set are found") {
    // triangle abc in the z=0 plane around the origin; edge d-e of def
    // threads through it
    auto K = make_complex({{"a", "b"}, {"b", "c"}, {"a", "c"},
                           {"d", "e"}, {"e", "f"}, {"d", "f"}});
    Coordinates coords;
    coords.dim = 3;
    coords.assignment = {{"a", P({3, 0, 0})},  {"b", P({-3, 3, 0})},
                         {"c", P({-3, -3, 0})}, {"d", P({0, 0, 2})},
                         {"e", P({0, 0, -2})},  {"f", P({9, 0, 0})}};
    auto pair = find_linked_cycle_pair(K, coords, {"a", "b", "c"}, 4);
    REQUIRE(pair.has_value());
    CHECK(pair->cycle1 == std::vector<Label>{"a", "b", "c"});
    CHECK(pair->cycle2 == std::vector<Label>{"d", "e", "f"});
    CHECK(std::abs(pair->lk) == 1);
}
