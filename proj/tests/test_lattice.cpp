#include "aztec/lattice.hpp"

#include "doctest.h"

using namespace aztec;

TEST_CASE("full grid joins unit neighbours only") {
    const LatticeSpec lat = LatticeSpec::full_grid();
    CHECK(edge_exists(lat, {0, 0}, {1, 0}));
    CHECK(edge_exists(lat, {0, 0}, {0, -1}));
    CHECK_FALSE(edge_exists(lat, {0, 0}, {1, 1}));
    CHECK_FALSE(edge_exists(lat, {0, 0}, {2, 0}));
    CHECK_FALSE(edge_exists(lat, {3, 3}, {3, 3}));
}

TEST_CASE("grid B cross table") {
    const LatticeSpec lat = LatticeSpec::grid_b();
    REQUIRE(lat.kind == LatticeKind::GridB);
    CHECK(lat.cross_table.size() == 14);
    CHECK(lat.is_cross_center(lat.anchor));

    SUBCASE("every tabulated edge is present around the anchor") {
        for (auto [p, q] : lat.cross_table) {
            HalfPoint hp{lat.anchor.x + p.x, lat.anchor.y + p.y};
            HalfPoint hq{lat.anchor.x + q.x, lat.anchor.y + q.y};
            REQUIRE(hp.x % 2 == 0);
            REQUIRE(hq.y % 2 == 0);
            CHECK(edge_exists(lat, {hp.x / 2, hp.y / 2}, {hq.x / 2, hq.y / 2}));
            CHECK(lat.owner({(hp.x + hq.x) / 2, (hp.y + hq.y) / 2}) == lat.anchor);
        }
    }

    SUBCASE("the two central verticals are missing") {
        const int cx = (lat.anchor.x - 1) / 2, cy = (lat.anchor.y - 1) / 2;  // lower-left of the centre square
        CHECK_FALSE(edge_exists(lat, {cx, cy}, {cx, cy + 1}));
        CHECK_FALSE(edge_exists(lat, {cx + 1, cy}, {cx + 1, cy + 1}));
        CHECK(edge_exists(lat, {cx, cy}, {cx + 1, cy}));
        CHECK(edge_exists(lat, {cx, cy + 1}, {cx + 1, cy + 1}));
    }
}

TEST_CASE("grid B is invariant under its period translations") {
    const LatticeSpec lat = LatticeSpec::grid_b();
    for (Point t : lat.period_vectors)
        for (int x = -8; x <= 8; ++x)
            for (int y = -8; y <= 8; ++y)
                for (Point d : {Point{1, 0}, Point{0, 1}}) {
                    Point p{x, y}, q{x + d.x, y + d.y};
                    CHECK(edge_exists(lat, p, q) == edge_exists(lat, {p.x + t.x, p.y + t.y}, {q.x + t.x, q.y + t.y}));
                }
}

TEST_CASE("grid B is a subgraph of the square grid") {
    const LatticeSpec b = LatticeSpec::grid_b(), full = LatticeSpec::full_grid();
    for (int x = -6; x <= 6; ++x)
        for (int y = -6; y <= 6; ++y)
            for (int dx = -2; dx <= 2; ++dx)
                for (int dy = -2; dy <= 2; ++dy)
                    if (edge_exists(b, {x, y}, {x + dx, y + dy})) CHECK(edge_exists(full, {x, y}, {x + dx, y + dy}));
}

TEST_CASE("contours close and report malformed input") {
    ContourSpec diamond;
    diamond.start = {1, 1};
    diamond.sides = {{Compass::NE, 2}, {Compass::NW, 2}, {Compass::SW, 2}, {Compass::SE, 2}};
    Polyline p = trace_contour(diamond);
    REQUIRE(p.corners.size() == 5);
    CHECK(p.corners.front() == p.corners.back());
    CHECK(inside_or_on(p, {1, 5}));
    CHECK(inside_or_on(p, {1, 1}));
    CHECK_FALSE(inside_or_on(p, {9, 1}));

    ContourSpec open = diamond;
    open.sides.pop_back();
    CHECK_THROWS_AS(trace_contour(open), Error);
    try {
        trace_contour(open);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonClosing);
    }

    ContourSpec bow;  // two triangles meeting at the start corner
    bow.start = {1, 1};
    bow.sides = {{Compass::NE, 1}, {Compass::W, 1}, {Compass::SE, 1}, {Compass::SW, 1}, {Compass::E, 1},
                 {Compass::NW, 1}};
    try {
        trace_contour(bow);
        FAIL("expected SelfIntersecting");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SelfIntersecting);
    }
}

TEST_CASE("segment membership") {
    CHECK(on_segment({0, 0}, {4, 4}, {2, 2}));
    CHECK_FALSE(on_segment({0, 0}, {4, 4}, {2, 3}));
    CHECK(on_segment({0, 0}, {4, 0}, {4, 0}));
}
