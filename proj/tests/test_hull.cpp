#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fatcast/hull.hpp"
#include "fatcast/rng.hpp"
#include "shapes.hpp"

using namespace fatcast;
using Catch::Approx;

TEST_CASE("hull of four points is a tetrahedron") {
    const std::vector<Point3> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const auto h = build_hull(pts);
    CHECK(h.vertex_count() == 4);
    CHECK(h.facet_count() == 4);
    CHECK(h.edge_count() == 6);
    CHECK(h.volume() == Approx(1.0 / 6.0));
}

TEST_CASE("hull merges coplanar faces into quads") {
    std::vector<Point3> pts;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) pts.push_back({double(sx), double(sy), double(sz)});

    const auto h = build_hull(pts);
    CHECK(h.vertex_count() == 8);
    CHECK(h.facet_count() == 6);
    CHECK(h.edge_count() == 12);
    CHECK(h.volume() == Approx(8.0));
    for (int f = 0; f < h.facet_count(); ++f) {
        CHECK(h.facet(f).size() == 4);
        CHECK(h.facet_area(f) == Approx(4.0));
    }
}

TEST_CASE("hull ignores interior and duplicate points") {
    std::vector<Point3> pts;
    for (int sx : {-1, 1})
        for (int sy : {-1, 1})
            for (int sz : {-1, 1}) pts.push_back({double(sx), double(sy), double(sz)});
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        pts.push_back({rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9)});
    }
    pts.push_back({1, 1, 1});
    pts.push_back({-1, -1, -1});

    const auto h = build_hull(pts);
    CHECK(h.vertex_count() == 8);
    CHECK(h.facet_count() == 6);
    CHECK(h.volume() == Approx(8.0));
}

TEST_CASE("hull of random sphere points is simplicial and contains its input") {
    Rng rng(2024);
    std::vector<Point3> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(rng.unit_vector());

    const auto h = build_hull(pts);
    CHECK(h.vertex_count() == 100);
    CHECK(h.facet_count() == 2 * h.vertex_count() - 4);
    CHECK(h.edge_count() == 3 * h.vertex_count() - 6);
    for (const auto& p : pts) CHECK(h.contains(p, 1e-9));
    CHECK(h.volume() > 3.5);                  // close to the ball volume 4.188
    CHECK(h.volume() < 4.0 * std::numbers::pi / 3.0);

    // Every original point lies on the hull boundary, none strictly inside.
    for (const auto& p : pts) CHECK_FALSE(h.contains(p, -1e-6));
}

TEST_CASE("hull contains random convex combinations of its vertices") {
    Rng rng(77);
    std::vector<Point3> pts;
    for (int i = 0; i < 30; ++i) pts.push_back(rng.unit_vector() * rng.uniform(0.5, 2.0));
    const auto h = build_hull(pts);

    for (int t = 0; t < 50; ++t) {
        Vec3 q{};
        double wsum = 0.0;
        for (int k = 0; k < 4; ++k) {
            const double w = rng.uniform(0.01, 1.0);
            q += h.vertex(rng.uniform_int(0, h.vertex_count() - 1)) * w;
            wsum += w;
        }
        CHECK(h.contains(q / wsum, 1e-9));
    }
}

TEST_CASE("hull rejects degenerate input") {
    CHECK_THROWS_AS(build_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}), DegenerateInput);
    CHECK_THROWS_AS(build_hull({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}}), DegenerateInput);
    CHECK_THROWS_AS(build_hull({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0.3, 0.4, 0}}),
                    DegenerateInput);
    CHECK_THROWS_AS(build_hull({{2, 2, 2}, {2, 2, 2}, {2, 2, 2}, {2, 2, 2}}), DegenerateInput);
}

TEST_CASE("hull reproduces explicit solids") {
    const auto octa = shapes::unit_octahedron();
    const auto h = build_hull(octa.vertices());
    CHECK(h.vertex_count() == 6);
    CHECK(h.facet_count() == 8);
    CHECK(h.volume() == Approx(octa.volume()));
    CHECK(h.surface_area() == Approx(octa.surface_area()));
}
