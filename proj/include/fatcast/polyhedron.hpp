#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fatcast/geometry.hpp"

namespace fatcast {

/// Undirected edge with its two incident facets.
struct Edge {
    int a = -1, b = -1;           // vertex indices, a < b
    int facet0 = -1, facet1 = -1; // incident facet indices
};

/// Closed convex polyhedron: vertices, oriented facet loops (counterclockwise
/// seen from outside), outward unit normals, and edge adjacency.
/// Immutable after construction; all member functions are const and pure.
class ConvexPolyhedron {
public:
    /// Builds from explicit vertex/facet data and verifies the structural
    /// invariants: closed 2-manifold (each edge in exactly two facets, loops
    /// consistently oriented), Euler relation V - E + F = 2, outward normals,
    /// planar facets, and convexity (every vertex inside every facet plane).
    static ConvexPolyhedron from_data(std::vector<Point3> vertices,
                                      std::vector<std::vector<int>> facets,
                                      double tol = 1e-9) {
        ConvexPolyhedron p;
        p.vertices_ = std::move(vertices);
        p.facets_ = std::move(facets);
        p.finish_construction(tol);
        return p;
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int facet_count() const { return static_cast<int>(facets_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Point3>& vertices() const { return vertices_; }
    const Point3& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }
    const std::vector<int>& facet(int f) const { return facets_[static_cast<size_t>(f)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    const Vec3& facet_normal(int f) const { return facet_normals_[static_cast<size_t>(f)]; }
    double facet_offset(int f) const { return facet_offsets_[static_cast<size_t>(f)]; }
    Plane facet_plane(int f) const { return Plane(facet_normal(f), facet_offset(f)); }

    /// Characteristic length used to scale tolerances.
    double scale() const { return scale_; }

    Point3 vertex_centroid() const {
        Vec3 c{};
        for (const auto& v : vertices_) c += v;
        return c / static_cast<double>(vertices_.size());
    }

    /// p satisfies every facet half-space within tol.
    bool contains(const Point3& p, double tol = 1e-9) const {
        for (int f = 0; f < facet_count(); ++f) {
            if (dot(facet_normal(f), p) - facet_offset(f) > tol) return false;
        }
        return true;
    }

    /// Area of one facet by fan triangulation of its loop.
    double facet_area(int f) const {
        const auto& loop = facets_[static_cast<size_t>(f)];
        const Point3& base = vertices_[static_cast<size_t>(loop[0])];
        double area = 0.0;
        for (size_t i = 1; i + 1 < loop.size(); ++i) {
            const Vec3 e1 = vertices_[static_cast<size_t>(loop[i])] - base;
            const Vec3 e2 = vertices_[static_cast<size_t>(loop[i + 1])] - base;
            area += 0.5 * cross(e1, e2).norm();
        }
        return area;
    }

    double surface_area() const {
        double s = 0.0;
        for (int f = 0; f < facet_count(); ++f) s += facet_area(f);
        return s;
    }

    /// Divergence-theorem volume: V = (1/3) sum_f offset_f * area_f.
    double volume() const {
        double v = 0.0;
        for (int f = 0; f < facet_count(); ++f) v += facet_offset(f) * facet_area(f);
        return v / 3.0;
    }

    std::vector<double> edge_lengths() const {
        std::vector<double> out;
        out.reserve(edges_.size());
        for (const Edge& e : edges_) {
            out.push_back(distance(vertices_[static_cast<size_t>(e.a)],
                                   vertices_[static_cast<size_t>(e.b)]));
        }
        return out;
    }

    /// Maximum pairwise vertex distance.
    double diameter() const {
        double best = 0.0;
        for (size_t i = 0; i < vertices_.size(); ++i) {
            for (size_t j = i + 1; j < vertices_.size(); ++j) {
                best = std::max(best, (vertices_[i] - vertices_[j]).squared_norm());
            }
        }
        return std::sqrt(best);
    }

    /// Facet reached by crossing the given edge away from `facet`.
    int neighbor_facet(const Edge& e, int facet) const {
        return e.facet0 == facet ? e.facet1 : e.facet0;
    }

    /// Index into edges() for the undirected pair (a, b), or -1.
    int find_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        auto it = edge_index_.find({a, b});
        return it == edge_index_.end() ? -1 : it->second;
    }

    /// Empty placeholder; every accessor is meaningless until a real
    /// polyhedron is assigned over it. Exists so aggregates holding results
    /// can be declared before being filled.
    ConvexPolyhedron() = default;

private:
    void finish_construction(double tol) {
        if (vertices_.size() < 4) throw InvalidPolyhedron("fewer than 4 vertices");
        if (facets_.size() < 4) throw InvalidPolyhedron("fewer than 4 facets");
        for (const auto& v : vertices_) {
            if (!v.finite()) throw InvalidPolyhedron("non-finite vertex coordinate");
        }

        Vec3 lo = vertices_[0], hi = vertices_[0];
        for (const auto& v : vertices_) {
            lo = {std::min(lo.x, v.x), std::min(lo.y, v.y), std::min(lo.z, v.z)};
            hi = {std::max(hi.x, v.x), std::max(hi.y, v.y), std::max(hi.z, v.z)};
        }
        scale_ = std::max((hi - lo).norm(), 1e-30);

        const Point3 centroid = vertex_centroid();
        facet_normals_.resize(facets_.size());
        facet_offsets_.resize(facets_.size());
        for (size_t f = 0; f < facets_.size(); ++f) {
            const auto& loop = facets_[f];
            if (loop.size() < 3) throw InvalidPolyhedron("facet with fewer than 3 vertices");
            for (int idx : loop) {
                if (idx < 0 || idx >= vertex_count()) throw InvalidPolyhedron("facet index out of range");
            }
            // Newell normal: outward iff the loop is counterclockwise from outside.
            Vec3 n{};
            for (size_t i = 0; i < loop.size(); ++i) {
                const Point3& a = vertices_[static_cast<size_t>(loop[i])];
                const Point3& b = vertices_[static_cast<size_t>(loop[(i + 1) % loop.size()])];
                n += cross(a, b);
            }
            const double len = n.norm();
            if (len <= tol * scale_ * scale_) throw InvalidPolyhedron("degenerate facet loop");
            n = n / len;
            double c = 0.0;
            for (int idx : loop) c += dot(n, vertices_[static_cast<size_t>(idx)]);
            c /= static_cast<double>(loop.size());
            if (dot(n, centroid) - c >= 0.0) throw InvalidPolyhedron("facet loop oriented inward");
            facet_normals_[f] = n;
            facet_offsets_[f] = c;
        }

        build_edges();

        if (vertex_count() - edge_count() + facet_count() != 2) {
            throw InvalidPolyhedron("Euler relation V - E + F = 2 violated");
        }

        const double dist_tol = tol * scale_;
        for (size_t f = 0; f < facets_.size(); ++f) {
            const Vec3& n = facet_normals_[f];
            const double c = facet_offsets_[f];
            for (int idx : facets_[f]) {
                if (std::abs(dot(n, vertices_[static_cast<size_t>(idx)]) - c) > dist_tol) {
                    throw InvalidPolyhedron("facet loop is not planar");
                }
            }
        }
        for (int v = 0; v < vertex_count(); ++v) {
            for (size_t f = 0; f < facets_.size(); ++f) {
                if (dot(facet_normals_[f], vertices_[static_cast<size_t>(v)]) - facet_offsets_[f] > dist_tol) {
                    throw InvalidPolyhedron("vertex outside a facet half-space (not convex)");
                }
            }
        }
    }

    void build_edges() {
        std::map<std::pair<int, int>, std::pair<int, int>> seen;  // (a<b) -> (facet, directed count)
        std::map<std::pair<int, int>, int> directed;
        for (size_t f = 0; f < facets_.size(); ++f) {
            const auto& loop = facets_[f];
            for (size_t i = 0; i < loop.size(); ++i) {
                const int a = loop[i];
                const int b = loop[(i + 1) % loop.size()];
                if (a == b) throw InvalidPolyhedron("repeated vertex in facet loop");
                if (++directed[{a, b}] > 1) throw InvalidPolyhedron("directed edge repeated (orientation)");
                const auto key = std::minmax(a, b);
                auto it = seen.find(key);
                if (it == seen.end()) {
                    seen.emplace(key, std::make_pair(static_cast<int>(f), 1));
                } else {
                    it->second.second += 1;
                    if (it->second.second > 2) throw InvalidPolyhedron("edge shared by more than two facets");
                    Edge e;
                    e.a = key.first;
                    e.b = key.second;
                    e.facet0 = it->second.first;
                    e.facet1 = static_cast<int>(f);
                    edge_index_[key] = static_cast<int>(edges_.size());
                    edges_.push_back(e);
                }
            }
        }
        for (const auto& [key, val] : seen) {
            if (val.second != 2) throw InvalidPolyhedron("edge with only one incident facet (not closed)");
        }
    }

    std::vector<Point3> vertices_;
    std::vector<std::vector<int>> facets_;
    std::vector<Vec3> facet_normals_;
    std::vector<double> facet_offsets_;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
    double scale_ = 1.0;
};

/// Result of the general-position check (no 4 coplanar vertices, no 3 facets
/// parallel to a common line), with the margins that back the verdict.
struct GeneralPositionReport {
    /// Facet-plane coplanarity margin: min distance of any vertex to any
    /// non-incident facet plane, normalized by the diameter. Zero when a facet
    /// has more than 3 vertices. When the exhaustive 4-subset test runs, the
    /// minimum of both tests.
    double coplanarity_margin = 0.0;
    /// Min |det| over all triples of facet unit normals; zero determinant
    /// means the three planes are parallel to a common line.
    double facet_triple_margin = 0.0;
    bool exhaustive = false;  ///< all 4-vertex subsets tested (V <= 20)
    double tolerance = 0.0;
    bool pass = false;
};

/// Checks general position at the given tolerance. Coplanarity is measured on
/// facet planes (any facet with > 3 vertices fails outright); for V <= 20 all
/// 4-vertex subsets are also tested via normalized tetrahedron volume, which
/// catches coplanar quadruples whose plane cuts the interior.
inline GeneralPositionReport validate_general_position(const ConvexPolyhedron& p, double tol = 1e-9) {
    GeneralPositionReport rep;
    rep.tolerance = tol;
    const double diam = p.diameter();

    double cop = std::numeric_limits<double>::infinity();
    for (int f = 0; f < p.facet_count(); ++f) {
        if (p.facet(f).size() > 3) {
            cop = 0.0;
            break;
        }
    }
    if (cop > 0.0) {
        for (int f = 0; f < p.facet_count(); ++f) {
            const Vec3& n = p.facet_normal(f);
            const double c = p.facet_offset(f);
            const auto& loop = p.facet(f);
            for (int v = 0; v < p.vertex_count(); ++v) {
                if (std::find(loop.begin(), loop.end(), v) != loop.end()) continue;
                cop = std::min(cop, std::abs(dot(n, p.vertex(v)) - c) / diam);
            }
        }
    }

    if (p.vertex_count() <= 20 && cop > 0.0) {
        rep.exhaustive = true;
        const double d3 = diam * diam * diam;
        const int V = p.vertex_count();
        for (int i = 0; i < V && cop > 0.0; ++i)
            for (int j = i + 1; j < V; ++j)
                for (int k = j + 1; k < V; ++k)
                    for (int l = k + 1; l < V; ++l) {
                        const double vol = std::abs(triple(p.vertex(j) - p.vertex(i),
                                                           p.vertex(k) - p.vertex(i),
                                                           p.vertex(l) - p.vertex(i))) / 6.0;
                        cop = std::min(cop, vol / d3);
                    }
    }
    rep.coplanarity_margin = std::isfinite(cop) ? cop : 0.0;

    double det_min = std::numeric_limits<double>::infinity();
    const int F = p.facet_count();
    for (int a = 0; a < F; ++a) {
        const Vec3& na = p.facet_normal(a);
        for (int b = a + 1; b < F; ++b) {
            const Vec3 ab = cross(na, p.facet_normal(b));
            for (int c = b + 1; c < F; ++c) {
                det_min = std::min(det_min, std::abs(dot(ab, p.facet_normal(c))));
            }
        }
    }
    rep.facet_triple_margin = std::isfinite(det_min) ? det_min : 0.0;

    rep.pass = rep.coplanarity_margin > tol && rep.facet_triple_margin > tol;
    return rep;
}

}  // namespace fatcast
