#pragma once

#include <cmath>
#include <limits>
#include <ostream>

#include "fatcast/errors.hpp"

namespace fatcast {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    constexpr bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr double squared_norm() const { return x * x + y * y + z * z; }

    Vec3 normalized() const {
        const double n = norm();
        if (n <= 0.0) throw DegenerateInput("cannot normalize zero vector");
        return {x / n, y / n, z / n};
    }

    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

using Point3 = Vec3;

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double distance(const Point3& a, const Point3& b) { return (a - b).norm(); }

/// Signed volume of the parallelepiped spanned by three vectors.
constexpr double triple(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

/// Lexicographic (x, y, z) order, used for deterministic tie-breaking.
constexpr bool lex_less(const Point3& a, const Point3& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    return a.z < b.z;
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

/// Oriented plane {p : normal . p = offset} with |normal| = 1.
struct Plane {
    Vec3 normal{0.0, 0.0, 1.0};
    double offset = 0.0;

    Plane() = default;
    Plane(const Vec3& n, double c) : normal(n), offset(c) {
        const double len = normal.norm();
        if (!(std::abs(len - 1.0) <= 1e-12)) {
            if (len <= 0.0 || !std::isfinite(len)) throw DegenerateInput("plane normal must be nonzero");
            normal = normal / len;
            offset = offset / len;
        }
    }

    static Plane through_points(const Point3& a, const Point3& b, const Point3& c) {
        const Vec3 n = cross(b - a, c - a);
        const double len = n.norm();
        if (len <= 0.0) throw DegenerateInput("plane through collinear points");
        const Vec3 u = n / len;
        return Plane(u, dot(u, a));
    }

    double signed_distance(const Point3& p) const { return dot(normal, p) - offset; }

    Plane flipped() const {
        Plane q;
        q.normal = -normal;
        q.offset = -offset;
        return q;
    }
};

/// Deterministic right-handed orthonormal frame (u, v, n) for a unit normal n.
/// cross(u, v) == n, so angles measured in (u, v) turn counterclockwise about n.
struct PlaneBasis {
    Vec3 u{1, 0, 0}, v{0, 1, 0}, n{0, 0, 1};

    PlaneBasis() = default;

    explicit PlaneBasis(const Vec3& unit_normal) : n(unit_normal) {
        const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
        Vec3 seed = (ax <= ay && ax <= az) ? Vec3{1, 0, 0} : (ay <= az ? Vec3{0, 1, 0} : Vec3{0, 0, 1});
        u = cross(n, seed).normalized();
        v = cross(n, u);
    }

    double coord_u(const Vec3& w) const { return dot(w, u); }
    double coord_v(const Vec3& w) const { return dot(w, v); }
    Vec3 from_coords(double a, double b) const { return u * a + v * b; }
};

}  // namespace fatcast
