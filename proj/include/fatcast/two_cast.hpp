#pragma once

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fatcast/casting.hpp"
#include "fatcast/clip.hpp"
#include "fatcast/fatness.hpp"
#include "fatcast/rng.hpp"

namespace fatcast {

enum class PlaneProvenance { VertexTriple, FacetParallel, Random };
enum class CutStrategy { VertexTriple, FacetParallel, Random, Mixed };

struct CutPlane {
    Plane plane;
    PlaneProvenance provenance = PlaneProvenance::Random;
};

namespace detail {

/// True when the plane has vertices strictly on both sides.
inline bool separates(const ConvexPolyhedron& P, const Plane& plane, double tol = 1e-9) {
    const double eps = tol * P.scale();
    bool pos = false, neg = false;
    for (const auto& v : P.vertices()) {
        const double s = plane.signed_distance(v);
        pos |= s > eps;
        neg |= s < -eps;
        if (pos && neg) return true;
    }
    return false;
}

inline Point3 random_interior_point(const ConvexPolyhedron& P, Rng& rng) {
    Vec3 lo = P.vertex(0), hi = P.vertex(0);
    for (const auto& v : P.vertices()) {
        lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
        hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
    }
    for (int tries = 0; tries < 1000; ++tries) {
        const Point3 p{rng.uniform(lo.x, hi.x), rng.uniform(lo.y, hi.y), rng.uniform(lo.z, hi.z)};
        if (P.contains(p, -1e-9 * P.scale())) return p;  // strict interior
    }
    return P.vertex_centroid();
}

inline void append_vertex_triples(const ConvexPolyhedron& P, int budget, uint64_t seed,
                                  std::vector<CutPlane>& out) {
    if (budget <= 0) return;
    const int V = P.vertex_count();
    const long long total = static_cast<long long>(V) * (V - 1) * (V - 2) / 6;
    auto try_triple = [&](int a, int b, int c) {
        Plane pl;
        try {
            pl = Plane::through_points(P.vertex(a), P.vertex(b), P.vertex(c));
        } catch (const DegenerateInput&) {
            return;
        }
        if (separates(P, pl)) out.push_back({pl, PlaneProvenance::VertexTriple});
    };
    if (total <= budget) {
        for (int a = 0; a < V; ++a)
            for (int b = a + 1; b < V; ++b)
                for (int c = b + 1; c < V; ++c) try_triple(a, b, c);
        return;
    }
    Rng rng(seed);
    std::set<std::array<int, 3>> seen;
    int emitted = 0;
    for (int tries = 0; emitted < budget && tries < budget * 20; ++tries) {
        int a = rng.uniform_int(0, V - 1);
        int b = rng.uniform_int(0, V - 1);
        int c = rng.uniform_int(0, V - 1);
        if (a == b || b == c || a == c) continue;
        std::array<int, 3> key{a, b, c};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        ++emitted;
        try_triple(key[0], key[1], key[2]);
    }
}

inline void append_facet_parallel(const ConvexPolyhedron& P, int offsets,
                                  std::vector<CutPlane>& out) {
    // One sweep direction per facet-normal class (opposite normals collapse).
    std::vector<Vec3> dirs;
    for (int f = 0; f < P.facet_count(); ++f) {
        Vec3 n = P.facet_normal(f);
        if (n.z < 0 || (n.z == 0 && (n.y < 0 || (n.y == 0 && n.x < 0)))) n = -n;
        bool dup = false;
        for (const auto& d : dirs) {
            if (cross(d, n).norm() < 1e-7) { dup = true; break; }
        }
        if (!dup) dirs.push_back(n);
    }
    for (const auto& n : dirs) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        for (const auto& v : P.vertices()) {
            const double s = dot(n, v);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        for (int k = 1; k <= offsets; ++k) {
            const double c = lo + (hi - lo) * static_cast<double>(k) / (offsets + 1);
            Plane pl(n, c);
            if (separates(P, pl)) out.push_back({pl, PlaneProvenance::FacetParallel});
        }
    }
}

inline void append_random(const ConvexPolyhedron& P, int budget, uint64_t seed,
                          std::vector<CutPlane>& out) {
    Rng rng(seed);
    for (int i = 0; i < budget; ++i) {
        const Point3 p = random_interior_point(P, rng);
        const Vec3 n = rng.unit_vector();
        Plane pl(n, dot(n, p));
        if (separates(P, pl)) out.push_back({pl, PlaneProvenance::Random});
    }
}

}  // namespace detail

/// Deterministic candidate cut planes. VertexTriple enumerates all vertex
/// triples when their count fits the budget, otherwise samples distinct
/// triples. FacetParallel sweeps each facet-normal direction with evenly
/// spaced interior offsets. Random draws planes through interior points with
/// uniform normals. Mixed spends the budget as: every facet-parallel plane,
/// then half the remainder on vertex triples, the rest random. Planes that do
/// not strictly separate the interior are filtered out.
inline std::vector<CutPlane> candidate_planes(const ConvexPolyhedron& P, CutStrategy strategy,
                                              int budget, uint64_t seed,
                                              int offsets_per_direction = 7) {
    if (budget < 1) throw PreconditionFailed("candidate budget must be at least 1");
    std::vector<CutPlane> out;
    switch (strategy) {
        case CutStrategy::VertexTriple:
            detail::append_vertex_triples(P, budget, seed, out);
            break;
        case CutStrategy::FacetParallel:
            detail::append_facet_parallel(P, offsets_per_direction, out);
            break;
        case CutStrategy::Random:
            detail::append_random(P, budget, seed, out);
            break;
        case CutStrategy::Mixed: {
            detail::append_facet_parallel(P, offsets_per_direction, out);
            if (static_cast<int>(out.size()) > budget) {
                out.resize(static_cast<size_t>(budget));
            }
            const int rem = budget - static_cast<int>(out.size());
            detail::append_vertex_triples(P, rem / 2, sub_seed(seed, 1), out);
            const int rand_budget = budget - static_cast<int>(out.size());
            detail::append_random(P, rand_budget, sub_seed(seed, 2), out);
            break;
        }
    }
    return out;
}

/// Full evaluation of one cut: both halves' per-facet verdicts, whether each
/// half is castable through some facet (two_castable, weak semantics) and
/// specifically through the mutual face C (both_through_C).
struct CutVerdict {
    CutResult cut;
    std::vector<CastVerdict> verdicts_large;
    std::vector<CastVerdict> verdicts_small;
    bool two_castable = false;
    bool both_through_C = false;
};

inline CutVerdict test_cut(const ConvexPolyhedron& P, const Plane& plane, double tol = 1e-7) {
    CutVerdict v;
    v.cut = clip(P, plane);
    v.verdicts_large = castable_faces(v.cut.part_large, Strictness::Weak, tol);
    v.verdicts_small = castable_faces(v.cut.part_small, Strictness::Weak, tol);
    auto any = [](const std::vector<CastVerdict>& list) {
        return std::any_of(list.begin(), list.end(),
                           [](const CastVerdict& c) { return c.castable_weak; });
    };
    v.two_castable = any(v.verdicts_large) && any(v.verdicts_small);
    v.both_through_C =
        v.verdicts_large[static_cast<size_t>(v.cut.cap_facet_large)].castable_weak &&
        v.verdicts_small[static_cast<size_t>(v.cut.cap_facet_small)].castable_weak;
    return v;
}

/// Marked/unmarked labels for the edges of the mutual face C. Edge i runs
/// from section[i] to section[i+1]; it is marked when its incident facets in
/// the two halves are coplanar fragments of one original facet.
struct EdgeMark {
    int section_index = -1;
    bool marked = false;
    int facet_large = -1, facet_small = -1;    // incident facet in each part
    int source_large = -1, source_small = -1;  // original facet of P, -1 for cap
};

struct EdgeMarking {
    std::vector<EdgeMark> edges;
    int unmarked_count = 0;
};

inline EdgeMarking classify_edges(const ConvexPolyhedron& P, const CutResult& cut,
                                  double tol = 1e-7) {
    EdgeMarking m;
    const int n = static_cast<int>(cut.section.size());
    for (int i = 0; i < n; ++i) {
        EdgeMark e;
        e.section_index = i;
        const int la = cut.section_vertex_large[static_cast<size_t>(i)];
        const int lb = cut.section_vertex_large[static_cast<size_t>((i + 1) % n)];
        const int sa = cut.section_vertex_small[static_cast<size_t>(i)];
        const int sb = cut.section_vertex_small[static_cast<size_t>((i + 1) % n)];
        const int el = cut.part_large.find_edge(la, lb);
        const int es = cut.part_small.find_edge(sa, sb);
        if (el < 0 || es < 0) throw Error("section edge missing from a part");
        e.facet_large = cut.part_large.neighbor_facet(cut.part_large.edges()[static_cast<size_t>(el)],
                                                      cut.cap_facet_large);
        e.facet_small = cut.part_small.neighbor_facet(cut.part_small.edges()[static_cast<size_t>(es)],
                                                      cut.cap_facet_small);
        e.source_large = cut.source_facet_large[static_cast<size_t>(e.facet_large)];
        e.source_small = cut.source_facet_small[static_cast<size_t>(e.facet_small)];

        const Vec3& n1 = cut.part_large.facet_normal(e.facet_large);
        const Vec3& n2 = cut.part_small.facet_normal(e.facet_small);
        const double c1 = cut.part_large.facet_offset(e.facet_large);
        const double c2 = cut.part_small.facet_offset(e.facet_small);
        const bool coplanar = dot(n1, n2) >= std::cos(tol) &&
                              std::abs(c1 - c2) <= tol * P.scale();
        e.marked = coplanar && e.source_large >= 0 && e.source_large == e.source_small;
        if (!e.marked) ++m.unmarked_count;
        m.edges.push_back(e);
    }
    return m;
}

/// Falsification search over candidate planes: returns the first two-castable
/// cut in candidate order, if any. Thin slabs (smaller part below 1e-6 of the
/// volume) and degenerate cuts are skipped. The unmarked-edge histogram
/// covers every cut actually evaluated.
struct SearchResult {
    std::optional<CutVerdict> witness;
    int witness_index = -1;
    int candidates = 0;
    int cuts_tested = 0;
    int cuts_skipped = 0;
    std::map<int, int> unmarked_histogram;
    CutStrategy strategy = CutStrategy::Mixed;
    int budget = 0;
    uint64_t seed = 0;
    double runtime_ms = 0.0;
};

inline SearchResult search_two_castable(const ConvexPolyhedron& P, int budget, uint64_t seed,
                                        CutStrategy strategy = CutStrategy::Mixed,
                                        double tol = 1e-7, int offsets_per_direction = 7) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchResult res;
    res.strategy = strategy;
    res.budget = budget;
    res.seed = seed;
    const auto candidates = candidate_planes(P, strategy, budget, seed, offsets_per_direction);
    res.candidates = static_cast<int>(candidates.size());
    const double vol = P.volume();

    auto any_castable = [&](const ConvexPolyhedron& part) {
        for (int f = 0; f < part.facet_count(); ++f) {
            if (direction_lp(part, f, tol).status != Feasibility::Infeasible) return true;
        }
        return false;
    };

    for (size_t i = 0; i < candidates.size(); ++i) {
        CutResult cut;
        try {
            cut = clip(P, candidates[i].plane);
        } catch (const DegenerateCut&) {
            ++res.cuts_skipped;
            continue;
        }
        if (cut.volume_small < 1e-6 * vol) {
            ++res.cuts_skipped;
            continue;
        }
        ++res.cuts_tested;
        const EdgeMarking marking = classify_edges(P, cut, tol);
        res.unmarked_histogram[marking.unmarked_count] += 1;

        if (!any_castable(cut.part_large) || !any_castable(cut.part_small)) continue;
        CutVerdict v = test_cut(P, candidates[i].plane, tol);
        if (v.two_castable) {
            res.witness = std::move(v);
            res.witness_index = static_cast<int>(i);
            break;
        }
    }
    res.runtime_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return res;
}

/// One tangency chord: the in-plane line parallel to the recession direction
/// tangent to the inner-sphere cross-section disk, clipped to C.
struct Chord {
    bool exists = false;
    Point3 a, b;
    double length = 0.0;  // normalized by the inner radius
};

/// Outcome of the recession-direction analysis for a cut whose halves are
/// both strongly castable through C. The chain is the set of section edges
/// whose in-plane outward normal has positive inner product with the
/// recession direction of the restricted (marked-facet) direction program of
/// the larger half. All lengths are normalized by the report's inner radius.
struct ChainDiagnostic {
    Vec3 recession_direction;
    EdgeMarking marking;
    std::vector<int> chain;
    bool contiguous = false;
    bool marked_all_nonpositive = false;
    double total_length = 0.0;
    double max_edge_length = 0.0;
    double disk_radius = 0.0;  // inner-disk radius in the cut plane, normalized
    Chord chord_pos, chord_neg;
};

inline ChainDiagnostic chain_diagnostic(const ConvexPolyhedron& P, const CutResult& cut,
                                        const FatnessReport& fatness, double tol = 1e-7) {
    const DirectionRegion full_large = direction_lp(cut.part_large, cut.cap_facet_large, tol);
    const DirectionRegion full_small = direction_lp(cut.part_small, cut.cap_facet_small, tol);
    if (full_large.status != Feasibility::StronglyFeasible ||
        full_small.status != Feasibility::StronglyFeasible) {
        throw PreconditionFailed("both halves must be strongly castable through the mutual face");
    }
    const double dist = std::abs(cut.plane.signed_distance(fatness.center));
    if (dist >= fatness.r_inner) {
        throw PreconditionFailed("inner sphere does not cross the cut plane");
    }

    ChainDiagnostic d;
    d.marking = classify_edges(P, cut, tol);

    std::vector<int> marked_facets;
    for (const EdgeMark& e : d.marking.edges) {
        if (e.marked) marked_facets.push_back(e.facet_large);
    }
    std::sort(marked_facets.begin(), marked_facets.end());
    marked_facets.erase(std::unique(marked_facets.begin(), marked_facets.end()),
                        marked_facets.end());

    const DirectionRegion restricted =
        direction_lp(cut.part_large, cut.cap_facet_large, tol, &marked_facets);
    if (!restricted.recession_bisector) {
        throw PreconditionFailed("restricted direction region has no recession direction");
    }
    const Vec3 v = *restricted.recession_bisector;
    d.recession_direction = v;

    const Vec3& ncap = cut.part_large.facet_normal(cut.cap_facet_large);
    const int n = static_cast<int>(cut.section.size());
    std::vector<Vec3> edge_normals(static_cast<size_t>(n));
    d.marked_all_nonpositive = true;
    for (int i = 0; i < n; ++i) {
        const Point3& a = cut.section[static_cast<size_t>(i)];
        const Point3& b = cut.section[static_cast<size_t>((i + 1) % n)];
        edge_normals[static_cast<size_t>(i)] = cross(b - a, ncap).normalized();
        const double side = dot(edge_normals[static_cast<size_t>(i)], v);
        if (side > 1e-9) {
            d.chain.push_back(i);
            const double len = (b - a).norm() / fatness.r_inner;
            d.total_length += len;
            d.max_edge_length = std::max(d.max_edge_length, len);
            if (d.marking.edges[static_cast<size_t>(i)].marked) d.marked_all_nonpositive = false;
        }
    }

    int breaks = 0;
    std::vector<char> in_chain(static_cast<size_t>(n), 0);
    for (int i : d.chain) in_chain[static_cast<size_t>(i)] = 1;
    for (int i = 0; i < n; ++i) {
        if (in_chain[static_cast<size_t>(i)] && !in_chain[static_cast<size_t>((i + 1) % n)]) ++breaks;
    }
    d.contiguous = !d.chain.empty() && breaks <= 1;

    const Point3 c0 = fatness.center - cut.plane.normal * cut.plane.signed_distance(fatness.center);
    const double rho = std::sqrt(std::max(0.0, fatness.r_inner * fatness.r_inner - dist * dist));
    d.disk_radius = rho / fatness.r_inner;
    const Vec3 w = cross(ncap, v).normalized();
    auto chord = [&](double sign) {
        Chord ch;
        const Point3 base = c0 + w * (sign * rho);
        double t_lo = -std::numeric_limits<double>::infinity();
        double t_hi = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const Vec3& ne = edge_normals[static_cast<size_t>(i)];
            const double rhs = dot(ne, cut.section[static_cast<size_t>(i)]) - dot(ne, base);
            const double coef = dot(ne, v);
            if (std::abs(coef) < 1e-12) {
                if (rhs < 0) return ch;  // line entirely outside this edge
            } else if (coef > 0) {
                t_hi = std::min(t_hi, rhs / coef);
            } else {
                t_lo = std::max(t_lo, rhs / coef);
            }
        }
        if (t_lo > t_hi) return ch;
        ch.exists = true;
        ch.a = base + v * t_lo;
        ch.b = base + v * t_hi;
        ch.length = (t_hi - t_lo) / fatness.r_inner;
        return ch;
    };
    d.chord_pos = chord(1.0);
    d.chord_neg = chord(-1.0);
    return d;
}

}  // namespace fatcast
