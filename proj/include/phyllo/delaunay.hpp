#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "phyllo/geometry.hpp"

namespace phyllo {

struct DuplicateSitesError : std::runtime_error {
    DuplicateSitesError(long first, long second)
        : std::runtime_error("coincident sites " + std::to_string(first) + " and " + std::to_string(second)),
          first(first),
          second(second) {}
    long first;
    long second;
};

struct DegenerateInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Triangulated surface with face adjacency. Faces are counter-clockwise
// (seen from outside on the sphere). In the planar case the hull is closed
// with "ghost" faces carrying the vertex `infinite`.
struct Triangulation {
    static constexpr int infinite = -1;

    std::vector<std::array<int, 3>> faces;
    std::vector<std::array<int, 3>> adjacent;   // adjacent[f][i] is across the edge opposite faces[f][i]
    std::vector<int> vertex_face;               // one incident face per vertex

    bool is_ghost(int f) const {
        const auto& v = faces[static_cast<std::size_t>(f)];
        return v[0] == infinite || v[1] == infinite || v[2] == infinite;
    }
    std::size_t vertex_count() const { return vertex_face.size(); }

    // Faces around vertex v in counter-clockwise order.
    std::vector<int> faces_around(int v) const;
    // Finite faces only, each listed once.
    std::vector<std::array<int, 3>> finite_faces() const;
};

Triangulation delaunay_2d(std::span<const Vec2> points);

// Convex hull of points in general position on a sphere; its faces are the
// spherical Delaunay triangles.
Triangulation sphere_hull(std::span<const Vec3> points);

}  // namespace phyllo
