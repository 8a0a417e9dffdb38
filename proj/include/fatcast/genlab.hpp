#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fatcast/fatness.hpp"
#include "fatcast/hull.hpp"
#include "fatcast/rng.hpp"

namespace fatcast {

enum class GenKind { SphereHull, Platonic, Prism, Perturbed };

/// Echo of a generation request, written into sidecar manifests.
struct GenSpec {
    GenKind kind = GenKind::SphereHull;
    int n = 0;                 // point count (sphere hulls) or polygon sides (prisms)
    double target_ratio = 0.0; // 0 when not ratio-driven
    uint64_t seed = 0;
    double epsilon = 0.0;      // perturbation magnitude
    std::string name;          // platonic solid name when applicable
};

struct GenResult {
    ConvexPolyhedron poly;
    FatnessReport report;
    int retries = 0;
};

/// Hull of n seeded uniform unit-sphere samples, measured from the origin.
/// Pathological draws (degenerate hulls, origin not interior) retry with a
/// derived sub-seed, up to 10 times.
inline GenResult gen_sphere_hull(int n, uint64_t seed) {
    if (n < 4) throw PreconditionFailed("sphere hull needs at least 4 points");
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rng rng(attempt == 0 ? seed : sub_seed(seed, static_cast<uint64_t>(attempt)));
        std::vector<Point3> pts;
        pts.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) pts.push_back(rng.unit_vector());
        try {
            GenResult r{build_hull(pts), FatnessReport{}, attempt};
            r.report = annulus_at(r.poly, Point3{0, 0, 0});
            return r;
        } catch (const DegenerateInput&) {
        } catch (const CenterOutside&) {
        }
    }
    throw DegenerateInput("sphere hull generation failed after 10 seeds");
}

/// Radial jitter: each vertex moves along its ray from the origin by a
/// uniform(-epsilon, epsilon) amount, then the points are re-hulled and the
/// general-position validator must pass. Retries with fresh sub-seeds.
/// Vertex quadruples lying on two rays through the origin (antipodal pairs of
/// centered solids) stay coplanar under radial motion and cannot be repaired.
inline ConvexPolyhedron perturb_general_position(const ConvexPolyhedron& P, double epsilon,
                                                 uint64_t seed, double gp_tol = 1e-9) {
    if (epsilon < 0) throw PreconditionFailed("perturbation magnitude must be nonnegative");
    for (int attempt = 0; attempt < 10; ++attempt) {
        Rng rng(attempt == 0 ? seed : sub_seed(seed, static_cast<uint64_t>(attempt)));
        std::vector<Point3> pts;
        pts.reserve(static_cast<size_t>(P.vertex_count()));
        for (const auto& v : P.vertices()) {
            const double len = v.norm();
            if (len == 0.0) {
                pts.push_back(v);
                continue;
            }
            pts.push_back(v * ((len + rng.uniform(-epsilon, epsilon)) / len));
        }
        try {
            ConvexPolyhedron out = build_hull(pts);
            if (validate_general_position(out, gp_tol).pass) return out;
        } catch (const DegenerateInput&) {
        } catch (const InvalidPolyhedron&) {
        }
        if (epsilon == 0.0) break;  // retries are identical
    }
    throw PerturbationFailed("no general-position perturbation found in 10 attempts");
}

struct FatGenResult {
    ConvexPolyhedron poly;
    FatnessReport report;
    GeneralPositionReport gp;
    int points_used = 0;
};

/// Grows a sphere hull until the origin-centered annulus ratio reaches the
/// target, then applies a general-position perturbation small enough to keep
/// the achieved ratio under the target (the magnitude is capped at an eighth
/// of the ratio headroom). Each round inserts points at the
/// sphere poles of the facets closest to the origin (the largest spherical
/// caps); rounds that stall fall back to uniform samples. Throws CapExceeded
/// with the best ratio once the vertex cap is reached.
inline FatGenResult gen_with_target_ratio(double target, uint64_t seed, int cap = 800,
                                          double epsilon = 1e-5) {
    if (target <= 1.0) throw PreconditionFailed("target ratio must exceed 1");

    epsilon = std::min(epsilon, (target - 1.0) / 8.0);
    const double pre_target = target - 4.0 * epsilon;

    Rng rng(seed);
    std::vector<Point3> pts;
    const int n0 = std::min(32, cap);
    for (int i = 0; i < n0; ++i) pts.push_back(rng.unit_vector());

    auto dedup_insert = [&](const Point3& p) {
        for (const auto& q : pts) {
            if ((p - q).squared_norm() < 1e-24) return false;
        }
        pts.push_back(p);
        return true;
    };

    ConvexPolyhedron hull = build_hull(pts);
    double best_ratio = std::numeric_limits<double>::infinity();
    double prev_min_offset = -std::numeric_limits<double>::infinity();
    while (true) {
        double min_offset = std::numeric_limits<double>::infinity();
        for (int f = 0; f < hull.facet_count(); ++f) {
            min_offset = std::min(min_offset, hull.facet_offset(f));
        }
        if (min_offset > 0.0) {
            best_ratio = std::min(best_ratio, annulus_at(hull, Point3{0, 0, 0}).ratio);
        }
        if (min_offset > 0.0 && 1.0 / min_offset <= pre_target) break;
        if (static_cast<int>(pts.size()) >= cap) {
            throw CapExceeded("vertex cap reached before target ratio", best_ratio);
        }

        const bool stalled = min_offset <= prev_min_offset + 1e-9;
        prev_min_offset = min_offset;
        std::vector<std::pair<double, int>> order;
        for (int f = 0; f < hull.facet_count(); ++f) {
            order.push_back({hull.facet_offset(f), f});
        }
        std::sort(order.begin(), order.end());
        int added = 0;
        const int batch = std::min(8, cap - static_cast<int>(pts.size()));
        if (!stalled) {
            for (const auto& [off, f] : order) {
                if (added >= batch) break;
                if (dedup_insert(hull.facet_normal(f))) ++added;
            }
        }
        while (added < batch) {
            if (dedup_insert(rng.unit_vector())) ++added;
        }
        hull = build_hull(pts);
    }

    FatGenResult res;
    res.points_used = static_cast<int>(pts.size());
    double eps = epsilon;
    for (int attempt = 0; attempt < 5; ++attempt, eps *= 0.5) {
        ConvexPolyhedron perturbed =
            perturb_general_position(hull, eps, sub_seed(seed, 1000 + static_cast<uint64_t>(attempt)));
        const FatnessReport rep = annulus_at(perturbed, Point3{0, 0, 0});
        if (rep.ratio <= target) {
            res.poly = std::move(perturbed);
            res.report = rep;
            res.gp = validate_general_position(res.poly);
            return res;
        }
    }
    throw PerturbationFailed("perturbation kept exceeding the target ratio");
}

enum class Platonic { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

inline const char* platonic_name(Platonic p) {
    switch (p) {
        case Platonic::Tetrahedron: return "tetrahedron";
        case Platonic::Cube: return "cube";
        case Platonic::Octahedron: return "octahedron";
        case Platonic::Dodecahedron: return "dodecahedron";
        case Platonic::Icosahedron: return "icosahedron";
    }
    return "";
}

inline ConvexPolyhedron make_platonic(Platonic which) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point3> pts;
    switch (which) {
        case Platonic::Tetrahedron:
            pts = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
            break;
        case Platonic::Cube:
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) pts.push_back({1.0 * sx, 1.0 * sy, 1.0 * sz});
            break;
        case Platonic::Octahedron:
            pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
            break;
        case Platonic::Dodecahedron:
            for (int sx : {-1, 1})
                for (int sy : {-1, 1})
                    for (int sz : {-1, 1}) pts.push_back({1.0 * sx, 1.0 * sy, 1.0 * sz});
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    pts.push_back({0.0, s1 / phi, s2 * phi});
                    pts.push_back({s1 / phi, s2 * phi, 0.0});
                    pts.push_back({s1 * phi, 0.0, s2 / phi});
                }
            break;
        case Platonic::Icosahedron:
            for (int s1 : {-1, 1})
                for (int s2 : {-1, 1}) {
                    pts.push_back({0.0, 1.0 * s1, s2 * phi});
                    pts.push_back({1.0 * s1, s2 * phi, 0.0});
                    pts.push_back({s1 * phi, 0.0, 1.0 * s2});
                }
            break;
    }
    return build_hull(pts);
}

/// Right prism over a regular n-gon of circumradius r.
inline ConvexPolyhedron make_prism(int sides, double height, double r = 1.0) {
    if (sides < 3) throw PreconditionFailed("prism needs at least 3 sides");
    if (height <= 0 || r <= 0) throw PreconditionFailed("prism dimensions must be positive");
    std::vector<Point3> pts;
    for (int i = 0; i < sides; ++i) {
        const double t = 2.0 * std::numbers::pi * i / sides;
        pts.push_back({r * std::cos(t), r * std::sin(t), 0.0});
        pts.push_back({r * std::cos(t), r * std::sin(t), height});
    }
    return build_hull(pts);
}

/// Right prism over a random convex polygon inscribed in the unit circle.
inline ConvexPolyhedron make_random_prism(Rng& rng) {
    const int sides = rng.uniform_int(3, 8);
    std::vector<double> angles;
    while (true) {
        angles.clear();
        for (int i = 0; i < sides; ++i) angles.push_back(rng.uniform(0.0, 2.0 * std::numbers::pi));
        std::sort(angles.begin(), angles.end());
        double min_gap = 2.0 * std::numbers::pi - angles.back() + angles.front();
        for (size_t i = 1; i < angles.size(); ++i) {
            min_gap = std::min(min_gap, angles[i] - angles[i - 1]);
        }
        if (min_gap > 0.05) break;
    }
    const double height = rng.uniform(0.5, 2.0);
    std::vector<Point3> pts;
    for (double t : angles) {
        pts.push_back({std::cos(t), std::sin(t), 0.0});
        pts.push_back({std::cos(t), std::sin(t), height});
    }
    return build_hull(pts);
}

}  // namespace fatcast
