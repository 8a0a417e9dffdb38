#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "fatcast/polyhedron.hpp"

namespace fatcast {
namespace detail {

struct HullFace {
    int a, b, c;
    Vec3 n;       // outward unit normal
    double off;   // plane offset, n . x = off
    bool alive = true;
};

inline HullFace make_face(const std::vector<Point3>& pts, int a, int b, int c,
                          const Point3& interior) {
    const Vec3 raw = cross(pts[static_cast<size_t>(b)] - pts[static_cast<size_t>(a)],
                           pts[static_cast<size_t>(c)] - pts[static_cast<size_t>(a)]);
    const double len = raw.norm();
    if (len == 0.0) throw DegenerateInput("collinear hull face");
    HullFace f{a, b, c, raw / len, 0.0, true};
    f.off = dot(f.n, pts[static_cast<size_t>(a)]);
    if (dot(f.n, interior) - f.off > 0.0) {
        std::swap(f.b, f.c);
        f.n = -f.n;
        f.off = dot(f.n, pts[static_cast<size_t>(f.a)]);
    }
    return f;
}

}  // namespace detail

/// Convex hull of a point set as a ConvexPolyhedron. Incremental insertion
/// with horizon repair, then adjacent near-coplanar triangles (normals within
/// merge_tol radians) are merged into polygon facets and vertices interior to
/// a facet or edge are dropped. Throws DegenerateInput when the points span
/// fewer than three dimensions.
inline ConvexPolyhedron build_hull(const std::vector<Point3>& points, double merge_tol = 1e-7) {
    using detail::HullFace;
    const int n = static_cast<int>(points.size());
    if (n < 4) throw DegenerateInput("hull needs at least 4 points");
    for (const auto& p : points) {
        if (!p.finite()) throw DegenerateInput("non-finite input point");
    }

    Vec3 lo = points[0], hi = points[0];
    for (const auto& p : points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const double scale = (hi - lo).norm();
    if (scale == 0.0) throw DegenerateInput("all points coincide");
    const double eps_span = 1e-12 * scale;

    // Initial tetrahedron from extreme points.
    int i0 = 0;
    for (int i = 1; i < n; ++i) {
        if (lex_less(points[static_cast<size_t>(i)], points[static_cast<size_t>(i0)])) i0 = i;
    }
    int i1 = -1;
    double best = eps_span;
    for (int i = 0; i < n; ++i) {
        const double d = distance(points[static_cast<size_t>(i)], points[static_cast<size_t>(i0)]);
        if (d > best) { best = d; i1 = i; }
    }
    if (i1 < 0) throw DegenerateInput("all points coincide");
    int i2 = -1;
    best = eps_span * scale;
    const Vec3 dir01 = points[static_cast<size_t>(i1)] - points[static_cast<size_t>(i0)];
    for (int i = 0; i < n; ++i) {
        const double d = cross(dir01, points[static_cast<size_t>(i)] - points[static_cast<size_t>(i0)]).norm();
        if (d > best) { best = d; i2 = i; }
    }
    if (i2 < 0) throw DegenerateInput("points are collinear");
    int i3 = -1;
    best = eps_span * scale * scale;
    const Vec3 dir02 = points[static_cast<size_t>(i2)] - points[static_cast<size_t>(i0)];
    for (int i = 0; i < n; ++i) {
        const double d = std::abs(triple(dir01, dir02, points[static_cast<size_t>(i)] - points[static_cast<size_t>(i0)]));
        if (d > best) { best = d; i3 = i; }
    }
    if (i3 < 0) throw DegenerateInput("points are coplanar");

    const Point3 interior = (points[static_cast<size_t>(i0)] + points[static_cast<size_t>(i1)] +
                             points[static_cast<size_t>(i2)] + points[static_cast<size_t>(i3)]) / 4.0;

    std::vector<HullFace> faces;
    faces.push_back(detail::make_face(points, i0, i1, i2, interior));
    faces.push_back(detail::make_face(points, i0, i1, i3, interior));
    faces.push_back(detail::make_face(points, i0, i2, i3, interior));
    faces.push_back(detail::make_face(points, i1, i2, i3, interior));

    const double eps_vis = 1e-12 * scale;
    for (int p = 0; p < n; ++p) {
        if (p == i0 || p == i1 || p == i2 || p == i3) continue;
        const Point3& pt = points[static_cast<size_t>(p)];

        std::vector<int> visible;
        int seed = -1;
        double seed_depth = eps_vis;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (!faces[static_cast<size_t>(f)].alive) continue;
            const double d = dot(faces[static_cast<size_t>(f)].n, pt) - faces[static_cast<size_t>(f)].off;
            if (d > eps_vis) {
                visible.push_back(f);
                if (d > seed_depth) { seed_depth = d; seed = f; }
            }
        }
        if (seed < 0) continue;  // inside or on the current hull

        // Directed edge (u, v) -> owning alive face.
        std::map<std::pair<int, int>, int> owner;
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            const HullFace& fc = faces[static_cast<size_t>(f)];
            if (!fc.alive) continue;
            owner[{fc.a, fc.b}] = f;
            owner[{fc.b, fc.c}] = f;
            owner[{fc.c, fc.a}] = f;
        }

        // Restrict to the visible component reachable from the deepest face;
        // floating point can mark stray disconnected faces visible.
        std::vector<char> is_visible(faces.size(), 0);
        for (int f : visible) is_visible[static_cast<size_t>(f)] = 1;
        std::vector<char> in_region(faces.size(), 0);
        std::vector<int> stack{seed};
        in_region[static_cast<size_t>(seed)] = 1;
        while (!stack.empty()) {
            const int f = stack.back();
            stack.pop_back();
            const HullFace& fc = faces[static_cast<size_t>(f)];
            const std::pair<int, int> rev[3] = {{fc.b, fc.a}, {fc.c, fc.b}, {fc.a, fc.c}};
            for (const auto& e : rev) {
                auto it = owner.find(e);
                if (it == owner.end()) throw DegenerateInput("hull adjacency broken");
                const int g = it->second;
                if (is_visible[static_cast<size_t>(g)] && !in_region[static_cast<size_t>(g)]) {
                    in_region[static_cast<size_t>(g)] = 1;
                    stack.push_back(g);
                }
            }
        }

        // Horizon: directed edges of region faces whose neighbor is outside.
        std::map<int, int> horizon;  // u -> v, oriented with the region on the left
        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (!in_region[static_cast<size_t>(f)]) continue;
            const HullFace& fc = faces[static_cast<size_t>(f)];
            const std::pair<int, int> fwd[3] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
            for (const auto& e : fwd) {
                const int g = owner.at({e.second, e.first});
                if (!in_region[static_cast<size_t>(g)]) {
                    if (!horizon.emplace(e.first, e.second).second) {
                        throw DegenerateInput("hull horizon is not a simple loop");
                    }
                }
            }
        }
        if (horizon.empty()) throw DegenerateInput("hull horizon is empty");

        for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
            if (in_region[static_cast<size_t>(f)]) faces[static_cast<size_t>(f)].alive = false;
        }

        const int start = horizon.begin()->first;
        int u = start;
        size_t steps = 0;
        do {
            auto it = horizon.find(u);
            if (it == horizon.end() || ++steps > horizon.size()) {
                throw DegenerateInput("hull horizon is not a simple loop");
            }
            const int v = it->second;
            faces.push_back(detail::make_face(points, u, v, p, interior));
            u = v;
        } while (u != start);
        if (steps != horizon.size()) throw DegenerateInput("hull horizon is not a simple loop");
    }

    // Merge near-coplanar adjacent triangles into polygon facets.
    std::vector<int> alive;
    std::map<std::pair<int, int>, int> owner;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const HullFace& fc = faces[static_cast<size_t>(f)];
        if (!fc.alive) continue;
        alive.push_back(f);
        owner[{fc.a, fc.b}] = f;
        owner[{fc.b, fc.c}] = f;
        owner[{fc.c, fc.a}] = f;
    }
    const double cos_merge = std::cos(merge_tol);

    std::vector<int> group_of(faces.size(), -1);
    std::vector<std::vector<int>> groups;
    for (int f : alive) {
        if (group_of[static_cast<size_t>(f)] >= 0) continue;
        const int gid = static_cast<int>(groups.size());
        groups.emplace_back();
        std::vector<int> stack{f};
        group_of[static_cast<size_t>(f)] = gid;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            groups[static_cast<size_t>(gid)].push_back(cur);
            const HullFace& fc = faces[static_cast<size_t>(cur)];
            const std::pair<int, int> rev[3] = {{fc.b, fc.a}, {fc.c, fc.b}, {fc.a, fc.c}};
            for (const auto& e : rev) {
                const int g = owner.at(e);
                if (group_of[static_cast<size_t>(g)] >= 0) continue;
                if (dot(fc.n, faces[static_cast<size_t>(g)].n) >= cos_merge) {
                    group_of[static_cast<size_t>(g)] = gid;
                    stack.push_back(g);
                }
            }
        }
    }

    std::vector<std::vector<int>> loops;
    loops.reserve(groups.size());
    for (const auto& group : groups) {
        // Boundary of the group: directed edges whose mate lies outside it.
        std::map<int, int> boundary;
        const int gid = group_of[static_cast<size_t>(group[0])];
        for (int f : group) {
            const HullFace& fc = faces[static_cast<size_t>(f)];
            const std::pair<int, int> fwd[3] = {{fc.a, fc.b}, {fc.b, fc.c}, {fc.c, fc.a}};
            for (const auto& e : fwd) {
                if (group_of[static_cast<size_t>(owner.at({e.second, e.first}))] != gid) {
                    if (!boundary.emplace(e.first, e.second).second) {
                        throw DegenerateInput("merged facet boundary is not simple");
                    }
                }
            }
        }
        if (boundary.size() < 3) throw DegenerateInput("merged facet boundary too short");
        std::vector<int> loop;
        const int start = boundary.begin()->first;
        int u = start;
        do {
            loop.push_back(u);
            auto it = boundary.find(u);
            if (it == boundary.end() || loop.size() > boundary.size()) {
                throw DegenerateInput("merged facet boundary is not a single loop");
            }
            u = it->second;
        } while (u != start);
        if (loop.size() != boundary.size()) {
            throw DegenerateInput("merged facet boundary is not a single loop");
        }

        // Drop vertices where the boundary continues straight.
        const double sin_tol = std::sin(merge_tol);
        bool changed = true;
        while (changed && loop.size() > 3) {
            changed = false;
            for (size_t i = 0; i < loop.size() && loop.size() > 3; ++i) {
                const Point3& a = points[static_cast<size_t>(loop[(i + loop.size() - 1) % loop.size()])];
                const Point3& b = points[static_cast<size_t>(loop[i])];
                const Point3& c = points[static_cast<size_t>(loop[(i + 1) % loop.size()])];
                const Vec3 e1 = b - a, e2 = c - b;
                if (cross(e1, e2).norm() <= sin_tol * e1.norm() * e2.norm()) {
                    loop.erase(loop.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    --i;
                }
            }
        }
        loops.push_back(std::move(loop));
    }

    // Reindex to the vertices that survived.
    std::vector<int> remap(points.size(), -1);
    std::vector<Point3> verts;
    for (auto& loop : loops) {
        for (int& idx : loop) {
            if (remap[static_cast<size_t>(idx)] < 0) {
                remap[static_cast<size_t>(idx)] = static_cast<int>(verts.size());
                verts.push_back(points[static_cast<size_t>(idx)]);
            }
            idx = remap[static_cast<size_t>(idx)];
        }
    }
    return ConvexPolyhedron::from_data(std::move(verts), std::move(loops),
                                       std::max(1e-9, 4.0 * merge_tol));
}

}  // namespace fatcast
