#pragma once

#include <vector>

#include "phyllo/delaunay.hpp"
#include "phyllo/generator.hpp"

namespace phyllo {

struct NeighborLink {
    long from = 0;
    long to = 0;
    long delta_s = 0;
    double distance = 0;   // geodesic, in units where the mean cell area is pi
    int rank = 0;          // u with |delta_s| = f_u, 0 when |delta_s| is not a Fibonacci number
};

struct VoronoiCell {
    long s = 0;
    std::vector<Vec2> polygon;     // chart coordinates, counter-clockwise
    std::vector<Vec3> polygon3d;   // sphere only, on the sphere of radius R
    std::vector<long> ring;        // neighbors counter-clockwise; edge k-1 -> k is dual to ring[k]
    int sides = 0;
    double area = std::numeric_limits<double>::quiet_NaN();
    bool is_boundary = false;
    bool unbounded = false;
    bool is_core = false;
};

struct TessellationOptions {
    // Sites this close to a pole (by index) form the irregular core.
    long core_size = 10;
};

struct Tessellation {
    PhylloPattern pattern;
    std::vector<VoronoiCell> cells;
    std::vector<std::vector<NeighborLink>> adjacency;   // per site, sorted by delta_s
    Triangulation triangulation;
    double outer_radius = 0;                            // chart radius of the outermost site

    const std::vector<NeighborLink>& neighbors(long s) const { return adjacency[static_cast<std::size_t>(s)]; }
    long size() const { return static_cast<long>(cells.size()); }
};

// Cells of the plane and the hyperbolic disc are flagged as boundary when the
// site lies on the hull or when one of its Delaunay circumcircles reaches past
// the outermost site: such cells depend on points the pattern does not contain.
Tessellation tessellate(const PhylloPattern& pattern, TessellationOptions options = {});

double cell_area(const Tessellation& tess, long s);

enum class CellClass { boundary, square, pentagon, hexagon, heptagon, other };
const char* cell_class_name(CellClass c);
std::vector<CellClass> classify(const Tessellation& tess);

// Membership of a point in the constructed cell of site s. Chart coordinates
// on the plane and the disc; a point of the sphere of radius R otherwise.
bool cell_contains(const Tessellation& tess, long s, Vec2 point);
bool cell_contains(const Tessellation& tess, long s, Vec3 point);

}  // namespace phyllo
