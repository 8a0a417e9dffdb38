#pragma once

#include <utility>
#include <vector>

#include "fatcast/polyhedron.hpp"

namespace shapes {

using fatcast::ConvexPolyhedron;
using fatcast::Point3;

/// Axis-aligned cube [-1, 1]^3 as explicit vertex/facet data.
inline std::pair<std::vector<Point3>, std::vector<std::vector<int>>> cube_data() {
    std::vector<Point3> v = {
        {-1, -1, -1}, {1, -1, -1}, {1, 1, -1}, {-1, 1, -1},
        {-1, -1, 1},  {1, -1, 1},  {1, 1, 1},  {-1, 1, 1},
    };
    std::vector<std::vector<int>> f = {
        {0, 3, 2, 1},  // z = -1
        {4, 5, 6, 7},  // z = +1
        {0, 1, 5, 4},  // y = -1
        {1, 2, 6, 5},  // x = +1
        {2, 3, 7, 6},  // y = +1
        {3, 0, 4, 7},  // x = -1
    };
    return {std::move(v), std::move(f)};
}

inline ConvexPolyhedron unit_cube() {
    auto [v, f] = cube_data();
    return ConvexPolyhedron::from_data(std::move(v), std::move(f));
}

/// Corner tetrahedron with legs along the axes; volume 1/6.
inline ConvexPolyhedron corner_tetra() {
    std::vector<Point3> v = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    std::vector<std::vector<int>> f = {{0, 2, 1}, {0, 1, 3}, {0, 3, 2}, {1, 2, 3}};
    return ConvexPolyhedron::from_data(std::move(v), std::move(f));
}

/// Octahedron |x| + |y| + |z| <= 1 as explicit data.
inline ConvexPolyhedron unit_octahedron() {
    std::vector<Point3> v = {
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1},
    };
    std::vector<std::vector<int>> f = {
        {0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
        {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5},
    };
    return ConvexPolyhedron::from_data(std::move(v), std::move(f));
}

}  // namespace shapes
