#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "fatcast/polyhedron.hpp"

namespace fatcast {

enum class Feasibility { Infeasible, WeaklyFeasible, StronglyFeasible };
enum class Strictness { Weak, Strong };

/// One half-plane constraint of the pull-direction program, in chart
/// coordinates: px * a + py * b <= q, where the candidate direction is
/// d = a * u + b * v + n_F on the chart plane n_F . d = 1.
struct LpConstraint {
    double px = 0.0, py = 0.0, q = 0.0;
    int facet = -1;  // the facet G contributing n_G . d <= 0
};

/// Feasible set of pull directions for one base facet. A direction removes
/// the mold iff it points out of the mold half-space (n_F . d > 0) and does
/// not push into any other facet (n_G . d <= 0). Weak feasibility allows
/// sliding contact (equalities); strong requires an interior direction.
struct DirectionRegion {
    int base_facet = -1;
    PlaneBasis basis;
    std::vector<LpConstraint> constraints;
    Feasibility status = Feasibility::Infeasible;
    std::optional<Vec3> witness;           // unit direction, all constraints within tol
    std::optional<Vec3> interior_witness;  // unit direction, strict margin beyond tol
    std::vector<Vec3> recession_rays;      // extreme unbounded directions, in the chart plane
    std::optional<Vec3> recession_bisector;  // deterministic interior-most recession direction
};

namespace detail {

using Pt2 = std::array<double, 2>;

inline std::vector<Pt2> clip_halfplane(const std::vector<Pt2>& poly, double px, double py,
                                       double q) {
    std::vector<Pt2> out;
    const size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Pt2& a = poly[i];
        const Pt2& b = poly[(i + 1) % n];
        const double da = px * a[0] + py * a[1] - q;
        const double db = px * b[0] + py * b[1] - q;
        if (da <= 0.0) out.push_back(a);
        if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
            const double t = da / (da - db);
            out.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
        }
    }
    return out;
}

/// Simplex descent in two variables (for the piecewise-linear chart margin).
template <typename F>
Pt2 nelder_mead_2d(F&& f, Pt2 start, double step, int iters) {
    std::array<Pt2, 3> x{start, Pt2{start[0] + step, start[1]}, Pt2{start[0], start[1] + step}};
    std::array<double, 3> fx{f(x[0]), f(x[1]), f(x[2])};
    auto order = [&] {
        if (fx[0] > fx[1]) { std::swap(fx[0], fx[1]); std::swap(x[0], x[1]); }
        if (fx[1] > fx[2]) { std::swap(fx[1], fx[2]); std::swap(x[1], x[2]); }
        if (fx[0] > fx[1]) { std::swap(fx[0], fx[1]); std::swap(x[0], x[1]); }
    };
    for (int it = 0; it < iters; ++it) {
        order();
        const Pt2 c{(x[0][0] + x[1][0]) / 2, (x[0][1] + x[1][1]) / 2};
        const Pt2 xr{c[0] + (c[0] - x[2][0]), c[1] + (c[1] - x[2][1])};
        const double fr = f(xr);
        if (fr < fx[0]) {
            const Pt2 xe{c[0] + 2 * (c[0] - x[2][0]), c[1] + 2 * (c[1] - x[2][1])};
            const double fe = f(xe);
            if (fe < fr) { x[2] = xe; fx[2] = fe; }
            else { x[2] = xr; fx[2] = fr; }
        } else if (fr < fx[1]) {
            x[2] = xr;
            fx[2] = fr;
        } else {
            const Pt2 xc{c[0] + 0.5 * (x[2][0] - c[0]), c[1] + 0.5 * (x[2][1] - c[1])};
            const double fc = f(xc);
            if (fc < fx[2]) { x[2] = xc; fx[2] = fc; }
            else {
                for (int i = 1; i < 3; ++i) {
                    x[static_cast<size_t>(i)] = {x[0][0] + 0.5 * (x[static_cast<size_t>(i)][0] - x[0][0]),
                                                 x[0][1] + 0.5 * (x[static_cast<size_t>(i)][1] - x[0][1])};
                    fx[static_cast<size_t>(i)] = f(x[static_cast<size_t>(i)]);
                }
            }
        }
    }
    order();
    return x[0];
}

struct RecessionInfo {
    std::vector<Pt2> rays;
    std::optional<Pt2> bisector;
};

/// Recession cone of {x : px*x + py*y <= q for all constraints}: the cone
/// {w : p . w <= 0}. Returns its extreme rays and a deterministic interior
/// representative. An unconstrained cone reports the two chart axes.
inline RecessionInfo recession_cone(const std::vector<LpConstraint>& constraints) {
    constexpr double eps_p = 1e-12;
    constexpr double eps_ray = 1e-9;
    RecessionInfo info;

    std::vector<Pt2> dirs;
    for (const auto& c : constraints) {
        const double len = std::hypot(c.px, c.py);
        if (len > eps_p) dirs.push_back({c.px / len, c.py / len});
    }
    if (dirs.empty()) {
        info.rays = {{1.0, 0.0}, {0.0, 1.0}};
        info.bisector = Pt2{1.0, 0.0};
        return info;
    }

    auto margin = [&](const Pt2& w) {
        double m = -std::numeric_limits<double>::infinity();
        for (const auto& d : dirs) m = std::max(m, d[0] * w[0] + d[1] * w[1]);
        return m;
    };

    std::vector<Pt2> candidates;
    for (const auto& d : dirs) {
        candidates.push_back({-d[1], d[0]});
        candidates.push_back({d[1], -d[0]});
    }
    for (const auto& c : candidates) {
        if (margin(c) > eps_ray) continue;
        bool dup = false;
        for (const auto& r : info.rays) {
            if (std::hypot(c[0] - r[0], c[1] - r[1]) < eps_ray) { dup = true; break; }
        }
        if (!dup) info.rays.push_back(c);
    }
    if (info.rays.empty()) return info;  // cone is the origin only

    std::vector<Pt2> bis_candidates;
    Pt2 sum{0.0, 0.0};
    for (const auto& r : info.rays) { sum[0] += r[0]; sum[1] += r[1]; }
    const double slen = std::hypot(sum[0], sum[1]);
    if (slen > eps_ray) bis_candidates.push_back({sum[0] / slen, sum[1] / slen});
    for (const auto& d : dirs) bis_candidates.push_back({-d[0], -d[1]});
    for (const auto& r : info.rays) bis_candidates.push_back(r);

    double best = std::numeric_limits<double>::infinity();
    for (const auto& c : bis_candidates) {
        const double m = margin(c);
        if (m <= eps_ray && m < best) {
            best = m;
            info.bisector = c;
        }
    }
    return info;
}

}  // namespace detail

/// Builds and solves the 2-variable pull-direction program for base facet F.
/// Candidate directions live on the chart n_F . d = 1; every other facet G
/// contributes the half-plane n_G . d <= 0. When subset is given, only those
/// facets contribute constraints (used by the restricted chain analysis).
/// tol separates strong (margin < -tol), weak (|margin| <= tol) and
/// infeasible outcomes at the best point found.
inline DirectionRegion direction_lp(const ConvexPolyhedron& P, int F, double tol = 1e-7,
                                    const std::vector<int>* subset = nullptr) {
    constexpr double kBox = 1e7;        // chart coordinates are confined to [-kBox, kBox]^2
    constexpr double kEpsKeep = 1e-8;   // slack so zero-width regions survive clipping
    constexpr double kEpsP = 1e-12;

    DirectionRegion region;
    region.base_facet = F;
    region.basis = PlaneBasis(P.facet_normal(F));
    const Vec3& u = region.basis.u;
    const Vec3& v = region.basis.v;
    const Vec3& nf = region.basis.n;

    std::vector<int> facets;
    if (subset) {
        facets = *subset;
    } else {
        for (int g = 0; g < P.facet_count(); ++g) {
            if (g != F) facets.push_back(g);
        }
    }
    bool contradiction = false;
    for (int g : facets) {
        if (g == F) continue;
        const Vec3& ng = P.facet_normal(g);
        LpConstraint c;
        c.px = dot(ng, u);
        c.py = dot(ng, v);
        c.q = -dot(ng, nf);
        c.facet = g;
        region.constraints.push_back(c);
        if (std::hypot(c.px, c.py) <= kEpsP && c.q < -kEpsKeep) contradiction = true;
    }

    if (!contradiction) {
        std::vector<detail::Pt2> poly{{-kBox, -kBox}, {kBox, -kBox}, {kBox, kBox}, {-kBox, kBox}};
        for (const auto& c : region.constraints) {
            if (std::hypot(c.px, c.py) <= kEpsP) continue;
            poly = detail::clip_halfplane(poly, c.px, c.py, c.q + kEpsKeep);
            if (poly.size() < 3) break;
        }
        if (poly.size() >= 3) {
            auto margin = [&](const detail::Pt2& x) {
                double lo = -kBox * 1.125, hi = kBox * 1.125;
                const double a = std::clamp(x[0], lo, hi);
                const double b = std::clamp(x[1], lo, hi);
                double m = -std::numeric_limits<double>::infinity();
                for (const auto& c : region.constraints) {
                    m = std::max(m, c.px * a + c.py * b - c.q);
                }
                return m;
            };
            detail::Pt2 centroid{0.0, 0.0};
            double span = 0.0;
            for (const auto& pt : poly) {
                centroid[0] += pt[0];
                centroid[1] += pt[1];
            }
            centroid[0] /= static_cast<double>(poly.size());
            centroid[1] /= static_cast<double>(poly.size());
            for (const auto& pt : poly) {
                span = std::max(span, std::hypot(pt[0] - centroid[0], pt[1] - centroid[1]));
            }
            detail::Pt2 best = detail::nelder_mead_2d(margin, centroid, std::max(span / 4.0, 1e-6), 120);
            if (margin(best) > margin(centroid)) best = centroid;
            best = {std::clamp(best[0], -kBox * 1.125, kBox * 1.125),
                    std::clamp(best[1], -kBox * 1.125, kBox * 1.125)};
            const double m = margin(best);
            auto to_dir = [&](const detail::Pt2& x) {
                return (region.basis.from_coords(x[0], x[1]) + nf).normalized();
            };
            if (m < -tol) {
                region.status = Feasibility::StronglyFeasible;
                region.witness = to_dir(best);
                region.interior_witness = region.witness;
            } else if (m <= tol) {
                region.status = Feasibility::WeaklyFeasible;
                region.witness = to_dir(best);
            }
        }
    }

    if (region.status != Feasibility::Infeasible) {
        const auto cone = detail::recession_cone(region.constraints);
        for (const auto& r : cone.rays) {
            region.recession_rays.push_back(region.basis.from_coords(r[0], r[1]).normalized());
        }
        if (cone.bisector) {
            region.recession_bisector =
                region.basis.from_coords((*cone.bisector)[0], (*cone.bisector)[1]).normalized();
        }
    }
    return region;
}

/// Maximum distance from P to the plane of facet F.
inline double thickness(const ConvexPolyhedron& P, int F) {
    const Vec3& n = P.facet_normal(F);
    const double c = P.facet_offset(F);
    double h = 0.0;
    for (const auto& v : P.vertices()) h = std::max(h, c - dot(n, v));
    return h;
}

/// Per-facet verdict. castable follows the strictness the caller asked for;
/// both semantics are always reported. For a weakly castable facet the
/// volume bound V <= area * thickness must hold (lemma2_ok).
struct CastVerdict {
    int facet = -1;
    bool castable = false;
    bool castable_weak = false;
    bool castable_strong = false;
    std::optional<Vec3> witness;
    double thickness = 0.0;
    double area = 0.0;
    bool lemma2_ok = true;
};

inline std::vector<CastVerdict> castable_faces(const ConvexPolyhedron& P,
                                               Strictness strictness = Strictness::Weak,
                                               double tol = 1e-7) {
    std::vector<CastVerdict> out;
    out.reserve(static_cast<size_t>(P.facet_count()));
    const double vol = P.volume();
    for (int f = 0; f < P.facet_count(); ++f) {
        const DirectionRegion r = direction_lp(P, f, tol);
        CastVerdict cv;
        cv.facet = f;
        cv.castable_weak = r.status != Feasibility::Infeasible;
        cv.castable_strong = r.status == Feasibility::StronglyFeasible;
        cv.castable = strictness == Strictness::Weak ? cv.castable_weak : cv.castable_strong;
        cv.witness = r.interior_witness ? r.interior_witness : r.witness;
        cv.thickness = thickness(P, f);
        cv.area = P.facet_area(f);
        cv.lemma2_ok = !cv.castable_weak || vol <= cv.area * cv.thickness + 1e-9 * vol;
        out.push_back(cv);
    }
    return out;
}

/// Volume bound for a castable facet: V(P) <= area(F) * thickness(F).
/// Throws NotCastable when P is not even weakly castable through F.
inline bool check_lemma2(const ConvexPolyhedron& P, int F, double tol = 1e-9) {
    const DirectionRegion r = direction_lp(P, F);
    if (r.status == Feasibility::Infeasible) {
        throw NotCastable("polyhedron is not castable through this facet");
    }
    const double vol = P.volume();
    return vol <= P.facet_area(F) * thickness(P, F) + tol * vol;
}

}  // namespace fatcast
