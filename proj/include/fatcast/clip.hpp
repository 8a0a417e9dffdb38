#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "fatcast/polyhedron.hpp"

namespace fatcast {

/// Result of cutting a convex polyhedron with a plane. The larger-volume part
/// is part_large (lexicographically smallest vertex breaks near-ties). Each
/// part gains one new facet, the cap, covering the planar section; all other
/// facets descend from facets of the input, recorded in source_facet_*.
/// The section polygon is listed in the order of part_large's cap loop, and
/// section_vertex_* give the matching vertex index inside each part.
struct CutResult {
    ConvexPolyhedron part_large;
    ConvexPolyhedron part_small;
    int cap_facet_large = -1;
    int cap_facet_small = -1;
    std::vector<int> source_facet_large;  // per facet of part_large, -1 for the cap
    std::vector<int> source_facet_small;
    std::vector<Point3> section;
    std::vector<int> section_vertex_large;
    std::vector<int> section_vertex_small;
    Plane plane;
    bool large_on_positive = false;  // large part lies where plane.signed_distance > 0
    double volume_large = 0.0;
    double volume_small = 0.0;
};

namespace detail {

struct PartBuilder {
    std::vector<std::vector<int>> loops;  // unified point ids
    std::vector<int> sources;
};

inline std::pair<ConvexPolyhedron, std::vector<int>> realize_part(
    const PartBuilder& pb, const std::vector<Point3>& unified, double tol,
    std::vector<int>& unified_to_part) {
    std::vector<Point3> verts;
    std::vector<std::vector<int>> facets;
    facets.reserve(pb.loops.size());
    for (const auto& loop : pb.loops) {
        std::vector<int> out;
        out.reserve(loop.size());
        for (int id : loop) {
            if (unified_to_part[static_cast<size_t>(id)] < 0) {
                unified_to_part[static_cast<size_t>(id)] = static_cast<int>(verts.size());
                verts.push_back(unified[static_cast<size_t>(id)]);
            }
            out.push_back(unified_to_part[static_cast<size_t>(id)]);
        }
        facets.push_back(std::move(out));
    }
    try {
        return {ConvexPolyhedron::from_data(std::move(verts), std::move(facets), tol),
                pb.sources};
    } catch (const InvalidPolyhedron& e) {
        throw DegenerateCut(std::string("cut produces an invalid part: ") + e.what());
    }
}

}  // namespace detail

/// Cuts P with the plane. Vertices within tol * scale of the plane are snapped
/// onto it and shared by both parts; crossing points are computed once per
/// edge so the two parts and the section agree exactly. Throws DegenerateCut
/// when the plane misses the interior or a part degenerates.
inline CutResult clip(const ConvexPolyhedron& P, const Plane& plane, double tol = 1e-9) {
    const double eps = tol * P.scale();
    const int V = P.vertex_count();

    std::vector<int> side(static_cast<size_t>(V));
    bool has_pos = false, has_neg = false;
    for (int v = 0; v < V; ++v) {
        const double s = plane.signed_distance(P.vertex(v));
        side[static_cast<size_t>(v)] = s > eps ? 1 : (s < -eps ? -1 : 0);
        has_pos |= side[static_cast<size_t>(v)] > 0;
        has_neg |= side[static_cast<size_t>(v)] < 0;
    }
    if (!has_pos || !has_neg) throw DegenerateCut("plane does not cut the interior");

    std::vector<Point3> unified = P.vertices();
    std::map<std::pair<int, int>, int> crossing;  // undirected edge -> unified id
    for (const Edge& e : P.edges()) {
        if (side[static_cast<size_t>(e.a)] * side[static_cast<size_t>(e.b)] < 0) {
            const double sa = plane.signed_distance(P.vertex(e.a));
            const double sb = plane.signed_distance(P.vertex(e.b));
            const double t = sa / (sa - sb);
            crossing[{e.a, e.b}] = static_cast<int>(unified.size());
            unified.push_back(P.vertex(e.a) + (P.vertex(e.b) - P.vertex(e.a)) * t);
        }
    }
    auto crossing_id = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return crossing.at({a, b});
    };
    auto on_plane = [&](int id) { return id >= V || side[static_cast<size_t>(id)] == 0; };

    detail::PartBuilder pos, neg;
    for (int f = 0; f < P.facet_count(); ++f) {
        const auto& loop = P.facet(f);
        std::vector<int> pos_loop, neg_loop;
        for (size_t i = 0; i < loop.size(); ++i) {
            const int a = loop[i];
            const int b = loop[(i + 1) % loop.size()];
            const int sa = side[static_cast<size_t>(a)];
            if (sa >= 0) pos_loop.push_back(a);
            if (sa <= 0) neg_loop.push_back(a);
            if (sa * side[static_cast<size_t>(b)] < 0) {
                const int cid = crossing_id(a, b);
                pos_loop.push_back(cid);
                neg_loop.push_back(cid);
            }
        }
        auto keep = [&](std::vector<int>& out, detail::PartBuilder& part) {
            if (out.size() < 3) return;
            Vec3 n{};
            for (size_t i = 0; i < out.size(); ++i) {
                n += cross(unified[static_cast<size_t>(out[i])],
                           unified[static_cast<size_t>(out[(i + 1) % out.size()])]);
            }
            if (n.norm() <= eps * P.scale()) return;
            part.loops.push_back(std::move(out));
            part.sources.push_back(f);
        };
        keep(pos_loop, pos);
        keep(neg_loop, neg);
    }

    // Cap loop: on-plane edges of the positive part, reversed so the cap is
    // counterclockwise seen from the negative side (outward normal -plane.normal).
    std::map<int, int> cap_edges;
    for (const auto& loop : pos.loops) {
        for (size_t i = 0; i < loop.size(); ++i) {
            const int u = loop[i];
            const int v = loop[(i + 1) % loop.size()];
            if (on_plane(u) && on_plane(v)) {
                if (!cap_edges.emplace(v, u).second) {
                    throw DegenerateCut("section boundary is not simple");
                }
            }
        }
    }
    if (cap_edges.size() < 3) throw DegenerateCut("section has fewer than 3 edges");
    std::vector<int> cap_loop;
    const int start = cap_edges.begin()->first;
    int u = start;
    do {
        cap_loop.push_back(u);
        auto it = cap_edges.find(u);
        if (it == cap_edges.end() || cap_loop.size() > cap_edges.size()) {
            throw DegenerateCut("section boundary is not a single loop");
        }
        u = it->second;
    } while (u != start);
    if (cap_loop.size() != cap_edges.size()) {
        throw DegenerateCut("section boundary is not a single loop");
    }

    pos.loops.push_back(cap_loop);
    pos.sources.push_back(-1);
    std::vector<int> cap_rev(cap_loop.rbegin(), cap_loop.rend());
    neg.loops.push_back(cap_rev);
    neg.sources.push_back(-1);

    std::vector<int> to_pos(unified.size(), -1), to_neg(unified.size(), -1);
    auto [poly_pos, src_pos] = detail::realize_part(pos, unified, tol, to_pos);
    auto [poly_neg, src_neg] = detail::realize_part(neg, unified, tol, to_neg);

    const double vol_pos = poly_pos.volume();
    const double vol_neg = poly_neg.volume();
    bool large_is_pos;
    if (std::abs(vol_pos - vol_neg) <= 1e-12 * (vol_pos + vol_neg)) {
        auto lex_min = [](const ConvexPolyhedron& p) {
            Point3 best = p.vertex(0);
            for (const auto& v : p.vertices()) {
                if (lex_less(v, best)) best = v;
            }
            return best;
        };
        large_is_pos = lex_less(lex_min(poly_pos), lex_min(poly_neg));
    } else {
        large_is_pos = vol_pos > vol_neg;
    }

    CutResult r;
    r.plane = plane;
    r.large_on_positive = large_is_pos;
    if (large_is_pos) {
        r.part_large = std::move(poly_pos);
        r.part_small = std::move(poly_neg);
        r.source_facet_large = std::move(src_pos);
        r.source_facet_small = std::move(src_neg);
        r.volume_large = vol_pos;
        r.volume_small = vol_neg;
    } else {
        r.part_large = std::move(poly_neg);
        r.part_small = std::move(poly_pos);
        r.source_facet_large = std::move(src_neg);
        r.source_facet_small = std::move(src_pos);
        r.volume_large = vol_neg;
        r.volume_small = vol_pos;
    }
    r.cap_facet_large = r.part_large.facet_count() - 1;
    r.cap_facet_small = r.part_small.facet_count() - 1;

    const auto& large_cap = r.part_large.facet(r.cap_facet_large);
    const auto& to_large = large_is_pos ? to_pos : to_neg;
    const auto& to_small = large_is_pos ? to_neg : to_pos;
    std::vector<int> part_to_unified(unified.size(), -1);
    for (size_t id = 0; id < unified.size(); ++id) {
        if (to_large[id] >= 0) part_to_unified[static_cast<size_t>(to_large[id])] = static_cast<int>(id);
    }
    for (int pv : large_cap) {
        const int id = part_to_unified[static_cast<size_t>(pv)];
        r.section.push_back(unified[static_cast<size_t>(id)]);
        r.section_vertex_large.push_back(pv);
        r.section_vertex_small.push_back(to_small[static_cast<size_t>(id)]);
    }
    return r;
}

}  // namespace fatcast
