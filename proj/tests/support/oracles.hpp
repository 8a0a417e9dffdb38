#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "fatcast/casting.hpp"
#include "fatcast/polyhedron.hpp"
#include "fatcast/rng.hpp"

namespace oracles {

using namespace fatcast;

/// Monte-Carlo rejection volume estimate from the bounding box, with its
/// standard error. Independent of the divergence-theorem computation.
struct McVolume {
    double estimate = 0.0;
    double std_error = 0.0;
};

inline McVolume mc_volume(const ConvexPolyhedron& p, long samples, uint64_t seed) {
    Vec3 lo = p.vertex(0), hi = p.vertex(0);
    for (const auto& v : p.vertices()) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    const Vec3 span = hi - lo;
    const double box = span.x * span.y * span.z;
    Rng rng(seed);
    long inside = 0;
    for (long i = 0; i < samples; ++i) {
        const Point3 q{lo.x + span.x * rng.uniform(), lo.y + span.y * rng.uniform(),
                       lo.z + span.z * rng.uniform()};
        if (p.contains(q, 0.0)) ++inside;
    }
    const double frac = static_cast<double>(inside) / static_cast<double>(samples);
    McVolume r;
    r.estimate = box * frac;
    r.std_error = box * std::sqrt(std::max(frac * (1.0 - frac), 1e-30) /
                                  static_cast<double>(samples));
    return r;
}

/// Brute-force pull-direction probe: dense deterministic sampling of the open
/// hemisphere n_F . d > 0 (Fibonacci spiral), reporting the best constraint
/// margin max_G n_G . d over all samples. Negative best margin certifies a
/// strictly feasible direction; a large positive one certifies infeasibility
/// because the margin is 1-Lipschitz and the spiral's covering radius is
/// about sqrt(2*pi/N).
struct DirectionProbe {
    double best_margin = std::numeric_limits<double>::infinity();
    Vec3 best_direction;
};

inline DirectionProbe probe_directions(const ConvexPolyhedron& p, int facet, int n = 10000) {
    const PlaneBasis basis(p.facet_normal(facet));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    DirectionProbe probe;
    for (int i = 0; i < n; ++i) {
        const double z = (i + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * i;
        const Vec3 d = basis.u * (r * std::cos(phi)) + basis.v * (r * std::sin(phi)) +
                       basis.n * z;
        double m = -std::numeric_limits<double>::infinity();
        for (int g = 0; g < p.facet_count(); ++g) {
            if (g == facet) continue;
            m = std::max(m, dot(p.facet_normal(g), d));
            if (m >= probe.best_margin) break;  // cannot improve the minimum
        }
        if (m < probe.best_margin) {
            probe.best_margin = m;
            probe.best_direction = d;
        }
    }
    return probe;
}

/// Oracle verdict with the near-degenerate band excluded: strictly negative
/// margins certify feasibility; margins above the covering radius certify
/// infeasibility; anything between is not decided by sampling.
enum class ProbeVerdict { Feasible, Infeasible, Undecided };

inline ProbeVerdict probe_verdict(const DirectionProbe& probe, double pos_tol = 1e-6,
                                  double neg_tol = 0.04) {
    if (probe.best_margin < -pos_tol) return ProbeVerdict::Feasible;
    if (probe.best_margin > neg_tol) return ProbeVerdict::Infeasible;
    return ProbeVerdict::Undecided;
}

/// Uniform random rotation from a normalized Gaussian quaternion.
inline std::array<Vec3, 3> random_rotation(Rng& rng) {
    double q[4];
    double n2 = 0.0;
    for (double& c : q) {
        c = rng.gaussian();
        n2 += c * c;
    }
    const double s = 1.0 / std::sqrt(n2);
    const double w = q[0] * s, x = q[1] * s, y = q[2] * s, z = q[3] * s;
    return {Vec3{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
            Vec3{2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
            Vec3{2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
}

inline Vec3 apply(const std::array<Vec3, 3>& m, const Vec3& v) {
    return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

/// Rebuilds the polyhedron with vertices rigidly moved; facet loops unchanged.
inline ConvexPolyhedron transformed(const ConvexPolyhedron& p, const std::array<Vec3, 3>& rot,
                                    const Vec3& shift) {
    std::vector<Point3> verts;
    verts.reserve(static_cast<size_t>(p.vertex_count()));
    for (const auto& v : p.vertices()) verts.push_back(apply(rot, v) + shift);
    return ConvexPolyhedron::from_data(std::move(verts), p.facets());
}

inline std::array<Vec3, 3> identity_rotation() {
    return {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
}

}  // namespace oracles
