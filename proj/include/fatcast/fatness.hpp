#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "fatcast/polyhedron.hpp"

namespace fatcast {

/// Concentric-annulus measurement at a center O: the largest sphere around O
/// inside P and the smallest sphere around O containing P.
struct FatnessReport {
    Point3 center;
    double r_inner = 0.0;
    double r_outer = 0.0;
    double ratio = 0.0;
    bool certified = false;  // true when exact for a fixed center
};

namespace detail {

inline double inner_radius_at(const ConvexPolyhedron& p, const Point3& o) {
    double r = std::numeric_limits<double>::infinity();
    for (int f = 0; f < p.facet_count(); ++f) {
        r = std::min(r, p.facet_offset(f) - dot(p.facet_normal(f), o));
    }
    return r;
}

inline double outer_radius_at(const ConvexPolyhedron& p, const Point3& o) {
    double r2 = 0.0;
    for (const auto& v : p.vertices()) r2 = std::max(r2, (v - o).squared_norm());
    return std::sqrt(r2);
}

/// Derivative-free simplex descent (Nelder-Mead) in 3 variables.
template <typename F>
Point3 nelder_mead(F&& f, const Point3& start, double step, int iters) {
    std::array<Point3, 4> x{start,
                            start + Vec3{step, 0, 0},
                            start + Vec3{0, step, 0},
                            start + Vec3{0, 0, step}};
    std::array<double, 4> fx;
    for (int i = 0; i < 4; ++i) fx[static_cast<size_t>(i)] = f(x[static_cast<size_t>(i)]);

    auto order = [&] {
        std::array<int, 4> idx{0, 1, 2, 3};
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            return fx[static_cast<size_t>(a)] < fx[static_cast<size_t>(b)];
        });
        std::array<Point3, 4> xs;
        std::array<double, 4> fs;
        for (int i = 0; i < 4; ++i) {
            xs[static_cast<size_t>(i)] = x[static_cast<size_t>(idx[static_cast<size_t>(i)])];
            fs[static_cast<size_t>(i)] = fx[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        }
        x = xs;
        fx = fs;
    };

    for (int it = 0; it < iters; ++it) {
        order();
        const Point3 c = (x[0] + x[1] + x[2]) / 3.0;  // centroid of the best three
        const Point3 xr = c + (c - x[3]);
        const double fr = f(xr);
        if (fr < fx[0]) {
            const Point3 xe = c + (c - x[3]) * 2.0;
            const double fe = f(xe);
            if (fe < fr) { x[3] = xe; fx[3] = fe; }
            else { x[3] = xr; fx[3] = fr; }
        } else if (fr < fx[2]) {
            x[3] = xr;
            fx[3] = fr;
        } else {
            const Point3 xc = c + (x[3] - c) * 0.5;
            const double fc = f(xc);
            if (fc < fx[3]) {
                x[3] = xc;
                fx[3] = fc;
            } else {
                for (int i = 1; i < 4; ++i) {
                    x[static_cast<size_t>(i)] = x[0] + (x[static_cast<size_t>(i)] - x[0]) * 0.5;
                    fx[static_cast<size_t>(i)] = f(x[static_cast<size_t>(i)]);
                }
            }
        }
    }
    order();
    return x[0];
}

}  // namespace detail

/// Exact annulus for a fixed center: R_i = min facet-plane distance,
/// R_o = max vertex distance. Throws CenterOutside unless the center is
/// strictly interior.
inline FatnessReport annulus_at(const ConvexPolyhedron& p, const Point3& center) {
    FatnessReport r;
    r.center = center;
    r.r_inner = detail::inner_radius_at(p, center);
    if (r.r_inner <= 0.0) throw CenterOutside("center is not strictly interior");
    r.r_outer = detail::outer_radius_at(p, center);
    r.ratio = r.r_outer / r.r_inner;
    r.certified = true;
    return r;
}

/// Heuristic ratio minimization over the center. Stage 1 maximizes the inner
/// radius (concave), stage 2 minimizes the ratio directly, both with simplex
/// descent seeded at the vertex centroid. The result never beats the true
/// optimum but is never worse than the centroid's own annulus.
inline FatnessReport best_center(const ConvexPolyhedron& p, int iters = 200) {
    const Point3 centroid = p.vertex_centroid();
    const FatnessReport at_centroid = annulus_at(p, centroid);

    const Point3 o1 = detail::nelder_mead(
        [&](const Point3& o) { return -detail::inner_radius_at(p, o); },
        centroid, std::max(0.25 * at_centroid.r_inner, 1e-6 * p.scale()), iters);

    const double inner1 = detail::inner_radius_at(p, o1);
    auto ratio_obj = [&](const Point3& o) {
        const double ri = detail::inner_radius_at(p, o);
        if (ri <= 0.0) return std::numeric_limits<double>::infinity();
        return detail::outer_radius_at(p, o) / ri;
    };
    const Point3 o2 = detail::nelder_mead(ratio_obj, o1, std::max(0.25 * inner1, 1e-6 * p.scale()), iters);

    FatnessReport best = at_centroid;
    for (const Point3& o : {o1, o2}) {
        if (detail::inner_radius_at(p, o) <= 0.0) continue;
        const FatnessReport r = annulus_at(p, o);
        if (r.ratio < best.ratio) best = r;
    }
    best.certified = false;
    return best;
}

/// Bounds implied by fatness ratio R once the inner radius is scaled to 1:
/// edge length at most l_star, facet area at most s_star, volume strictly
/// between v_lo and v_hi, diameter at most 2R.
struct LemmaBounds {
    double l_star = 0.0;
    double s_star = 0.0;
    double v_lo = 0.0;
    double v_hi = 0.0;

    static LemmaBounds from_ratio(double ratio) {
        LemmaBounds b;
        const double q = std::max(0.0, ratio * ratio - 1.0);
        b.l_star = 2.0 * std::sqrt(q);
        b.s_star = std::numbers::pi * q;
        b.v_lo = 4.0 * std::numbers::pi / 3.0;
        b.v_hi = 4.0 * std::numbers::pi / 3.0 * ratio * ratio * ratio;
        return b;
    }
};

/// Per-item verification of the fatness consequences, with every quantity
/// rescaled so the report's inner radius is 1.
struct Lemma1Check {
    LemmaBounds bounds;
    bool edges_ok = false;
    bool faces_ok = false;
    bool volume_lo_ok = false;
    bool volume_hi_ok = false;
    bool diameter_ok = false;
    std::vector<int> failing_edges;
    std::vector<int> failing_facets;
    double max_edge = 0.0;   // rescaled
    double max_area = 0.0;   // rescaled
    double volume = 0.0;     // rescaled
    double diameter = 0.0;   // rescaled

    bool all_ok() const {
        return edges_ok && faces_ok && volume_lo_ok && volume_hi_ok && diameter_ok;
    }
};

inline Lemma1Check check_lemma1(const ConvexPolyhedron& p, const FatnessReport& rep,
                                double tol = 1e-9) {
    Lemma1Check c;
    c.bounds = LemmaBounds::from_ratio(rep.ratio);
    const double s = 1.0 / rep.r_inner;

    const auto lengths = p.edge_lengths();
    c.edges_ok = true;
    for (size_t i = 0; i < lengths.size(); ++i) {
        const double l = lengths[i] * s;
        c.max_edge = std::max(c.max_edge, l);
        if (l > c.bounds.l_star + tol) {
            c.edges_ok = false;
            c.failing_edges.push_back(static_cast<int>(i));
        }
    }

    c.faces_ok = true;
    for (int f = 0; f < p.facet_count(); ++f) {
        const double a = p.facet_area(f) * s * s;
        c.max_area = std::max(c.max_area, a);
        if (a > c.bounds.s_star + tol) {
            c.faces_ok = false;
            c.failing_facets.push_back(f);
        }
    }

    c.volume = p.volume() * s * s * s;
    c.volume_lo_ok = c.volume > c.bounds.v_lo - tol;
    c.volume_hi_ok = c.volume < c.bounds.v_hi + tol;

    c.diameter = p.diameter() * s;
    c.diameter_ok = c.diameter <= 2.0 * rep.ratio + tol;
    return c;
}

}  // namespace fatcast
