#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fatcast/polyhedron.hpp"
#include "shapes.hpp"

using namespace fatcast;
using Catch::Approx;

TEST_CASE("cube measures") {
    const auto cube = shapes::unit_cube();

    CHECK(cube.vertex_count() == 8);
    CHECK(cube.facet_count() == 6);
    CHECK(cube.edge_count() == 12);
    CHECK(cube.volume() == Approx(8.0));
    CHECK(cube.surface_area() == Approx(24.0));
    CHECK(cube.diameter() == Approx(2.0 * std::sqrt(3.0)));
    for (int f = 0; f < 6; ++f) CHECK(cube.facet_area(f) == Approx(4.0));
    for (double len : cube.edge_lengths()) CHECK(len == Approx(2.0));

    const auto c = cube.vertex_centroid();
    CHECK(c.norm() == Approx(0.0).margin(1e-15));

    CHECK(cube.contains({0, 0, 0}));
    CHECK(cube.contains({1, 1, 1}));
    CHECK(cube.contains({0.999, -0.5, 0.2}));
    CHECK_FALSE(cube.contains({1.001, 0, 0}));

    for (int f = 0; f < 6; ++f) {
        CHECK(cube.facet_normal(f).norm() == Approx(1.0));
        CHECK(cube.facet_offset(f) == Approx(1.0));
    }
}

TEST_CASE("corner tetrahedron measures") {
    const auto tet = shapes::corner_tetra();

    CHECK(tet.vertex_count() == 4);
    CHECK(tet.facet_count() == 4);
    CHECK(tet.edge_count() == 6);
    CHECK(tet.volume() == Approx(1.0 / 6.0));
    CHECK(tet.diameter() == Approx(std::sqrt(2.0)));
    CHECK(tet.surface_area() == Approx(1.5 + std::sqrt(3.0) / 2.0));

    // Legs have area 1/2; the slanted facet has area sqrt(3)/2.
    int halves = 0, slanted = 0;
    for (int f = 0; f < 4; ++f) {
        const double a = tet.facet_area(f);
        if (a == Approx(0.5)) ++halves;
        if (a == Approx(std::sqrt(3.0) / 2.0)) ++slanted;
    }
    CHECK(halves == 3);
    CHECK(slanted == 1);
}

TEST_CASE("edge adjacency is consistent") {
    const auto cube = shapes::unit_cube();

    for (const Edge& e : cube.edges()) {
        CHECK(e.a < e.b);
        CHECK(e.facet0 != e.facet1);
        const int f0 = e.facet0;
        CHECK(cube.neighbor_facet(e, f0) == e.facet1);
        CHECK(cube.neighbor_facet(e, e.facet1) == f0);
        CHECK(cube.find_edge(e.a, e.b) >= 0);
        CHECK(cube.find_edge(e.b, e.a) == cube.find_edge(e.a, e.b));
    }
    CHECK(cube.find_edge(0, 6) == -1);  // body diagonal
    CHECK(cube.find_edge(0, 2) == -1);  // facet diagonal
}

TEST_CASE("construction rejects malformed data") {
    SECTION("reversed facet loop") {
        auto [v, f] = shapes::cube_data();
        std::reverse(f[1].begin(), f[1].end());
        CHECK_THROWS_AS(ConvexPolyhedron::from_data(v, f), InvalidPolyhedron);
    }
    SECTION("missing facet (open surface)") {
        auto [v, f] = shapes::cube_data();
        f.pop_back();
        CHECK_THROWS_AS(ConvexPolyhedron::from_data(v, f), InvalidPolyhedron);
    }
    SECTION("non-planar facet loop") {
        auto [v, f] = shapes::cube_data();
        v[6] = {1, 1, 0.8};
        CHECK_THROWS_AS(ConvexPolyhedron::from_data(v, f), InvalidPolyhedron);
    }
    SECTION("dented solid is not convex") {
        std::vector<Point3> v = {
            {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, -0.2}, {0, 0, -1},
        };
        std::vector<std::vector<int>> f = {
            {0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
            {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5},
        };
        CHECK_THROWS_AS(ConvexPolyhedron::from_data(v, f), InvalidPolyhedron);
    }
    SECTION("too few vertices") {
        CHECK_THROWS_AS(ConvexPolyhedron::from_data({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}},
                                                    {{0, 1, 2}}),
                        InvalidPolyhedron);
    }
    SECTION("facet index out of range") {
        auto [v, f] = shapes::cube_data();
        f[0][0] = 99;
        CHECK_THROWS_AS(ConvexPolyhedron::from_data(v, f), InvalidPolyhedron);
    }
    SECTION("non-finite coordinate") {
        auto [v, f] = shapes::cube_data();
        v[0].x = std::numeric_limits<double>::quiet_NaN();
        CHECK_THROWS_AS(ConvexPolyhedron::from_data(v, f), InvalidPolyhedron);
    }
}

TEST_CASE("general position verdicts") {
    SECTION("tetrahedron passes") {
        const auto rep = validate_general_position(shapes::corner_tetra());
        CHECK(rep.pass);
        CHECK(rep.exhaustive);
        CHECK(rep.coplanarity_margin > 1e-3);
        CHECK(rep.facet_triple_margin > 1e-3);
    }
    SECTION("cube fails on quad facets and parallel normals") {
        const auto rep = validate_general_position(shapes::unit_cube());
        CHECK_FALSE(rep.pass);
        CHECK(rep.coplanarity_margin == 0.0);
        CHECK(rep.facet_triple_margin == Approx(0.0).margin(1e-15));
    }
    SECTION("octahedron fails the exhaustive coplanarity test") {
        // All facets are triangles, yet the equator vertices are coplanar.
        const auto rep = validate_general_position(shapes::unit_octahedron());
        CHECK(rep.exhaustive);
        CHECK(rep.coplanarity_margin == Approx(0.0).margin(1e-15));
        CHECK_FALSE(rep.pass);
    }
    SECTION("slightly irregular tetrahedron passes") {
        std::vector<Point3> v = {{0, 0, 0}, {1.03, 0.01, 0}, {-0.02, 0.97, 0.04}, {0.05, -0.03, 1.01}};
        std::vector<std::vector<int>> f = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
        const auto rep = validate_general_position(ConvexPolyhedron::from_data(v, f));
        CHECK(rep.pass);
    }
}
