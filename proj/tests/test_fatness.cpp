#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fatcast/fatness.hpp"
#include "fatcast/genlab.hpp"
#include "fatcast/hull.hpp"
#include "fatcast/rng.hpp"
#include "shapes.hpp"

using namespace fatcast;
using Catch::Approx;

TEST_CASE("annulus of the cube at fixed centers") {
    const auto cube = shapes::unit_cube();

    const auto origin = annulus_at(cube, {0, 0, 0});
    CHECK(origin.r_inner == Approx(1.0));
    CHECK(origin.r_outer == Approx(std::sqrt(3.0)));
    CHECK(origin.ratio == Approx(std::sqrt(3.0)));
    CHECK(origin.certified);

    const auto shifted = annulus_at(cube, {0.5, 0, 0});
    CHECK(shifted.r_inner == Approx(0.5));
    CHECK(shifted.r_outer == Approx(std::sqrt(2.25 + 1.0 + 1.0)));

    CHECK_THROWS_AS(annulus_at(cube, {1.0, 0, 0}), CenterOutside);
    CHECK_THROWS_AS(annulus_at(cube, {2.0, 0, 0}), CenterOutside);
}

TEST_CASE("best center of symmetric solids reaches the known optimum") {
    const auto cube_rep = best_center(shapes::unit_cube());
    CHECK(cube_rep.ratio == Approx(std::sqrt(3.0)).epsilon(1e-6));
    CHECK_FALSE(cube_rep.certified);
    CHECK(cube_rep.center.norm() < 1e-6);

    const auto tet_rep = best_center(make_platonic(Platonic::Tetrahedron));
    CHECK(tet_rep.ratio == Approx(3.0).epsilon(1e-6));

    const auto octa_rep = best_center(shapes::unit_octahedron());
    CHECK(octa_rep.ratio == Approx(std::sqrt(3.0)).epsilon(1e-6));
}

TEST_CASE("best center is translation invariant") {
    const auto cube = shapes::unit_cube();
    const Vec3 t{5, -2, 11};
    std::vector<Point3> moved;
    for (const auto& v : cube.vertices()) moved.push_back(v + t);
    const auto shifted = ConvexPolyhedron::from_data(moved, cube.facets());

    const auto a = best_center(cube);
    const auto b = best_center(shifted);
    CHECK(b.ratio == Approx(a.ratio).epsilon(1e-9));
    CHECK(distance(b.center, a.center + t) < 1e-6 * shifted.scale());
}

TEST_CASE("best center result re-verifies exactly at its own center") {
    Rng rng(88);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point3> pts;
        for (int i = 0; i < 20; ++i) pts.push_back(rng.unit_vector() * rng.uniform(0.7, 1.5));
        const auto h = build_hull(pts);

        const auto rep = best_center(h);
        const auto again = annulus_at(h, rep.center);
        CHECK(again.r_inner == rep.r_inner);
        CHECK(again.r_outer == rep.r_outer);
        CHECK(again.ratio == rep.ratio);

        const auto at_centroid = annulus_at(h, h.vertex_centroid());
        CHECK(rep.ratio <= at_centroid.ratio + 1e-12);
        CHECK(rep.ratio >= 1.0);
    }
}

TEST_CASE("fatness bound table follows the ratio") {
    const auto b = LemmaBounds::from_ratio(std::sqrt(3.0));
    CHECK(b.l_star == Approx(2.0 * std::sqrt(2.0)));
    CHECK(b.s_star == Approx(2.0 * std::numbers::pi));
    CHECK(b.v_lo == Approx(4.0 * std::numbers::pi / 3.0));
    CHECK(b.v_hi == Approx(4.0 * std::numbers::pi * std::sqrt(3.0)));

    const auto tight = LemmaBounds::from_ratio(1.0);
    CHECK(tight.l_star == 0.0);
    CHECK(tight.s_star == 0.0);
    CHECK(tight.v_hi == Approx(tight.v_lo));
}

TEST_CASE("fatness consequences hold for measured annuli") {
    SECTION("cube") {
        const auto cube = shapes::unit_cube();
        const auto chk = check_lemma1(cube, annulus_at(cube, {0, 0, 0}));
        CHECK(chk.all_ok());
        CHECK(chk.max_edge == Approx(2.0));
        CHECK(chk.volume == Approx(8.0));
        CHECK(chk.diameter == Approx(2.0 * std::sqrt(3.0)));
    }
    SECTION("near-spherical hull") {
        const auto gen = gen_sphere_hull(200, 17);
        const auto chk = check_lemma1(gen.poly, gen.report);
        CHECK(chk.all_ok());
        CHECK(chk.failing_edges.empty());
        CHECK(chk.failing_facets.empty());
    }
    SECTION("skewed center still satisfies its own annulus") {
        const auto cube = shapes::unit_cube();
        const auto rep = annulus_at(cube, {0.6, -0.3, 0.2});
        CHECK(check_lemma1(cube, rep).all_ok());
    }
}

TEST_CASE("fatness checker flags fabricated reports") {
    const auto cube = shapes::unit_cube();
    FatnessReport bogus;
    bogus.center = {0, 0, 0};
    bogus.r_inner = 2.0;  // wrong: the true inner radius is 1
    bogus.r_outer = std::sqrt(3.0);
    bogus.ratio = bogus.r_outer / bogus.r_inner;
    bogus.certified = false;

    const auto chk = check_lemma1(cube, bogus);
    CHECK_FALSE(chk.all_ok());
    CHECK_FALSE(chk.volume_lo_ok);   // rescaled volume 1 < 4*pi/3
    CHECK_FALSE(chk.edges_ok);       // ratio < 1 forces l_star = 0
    CHECK_FALSE(chk.failing_edges.empty());
}
