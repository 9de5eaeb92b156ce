#include "phyllo/tessellation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace phyllo {

namespace {

Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    const Vec2 ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double lb = dot(ab, ab), lc = dot(ac, ac);
    return {a.x + (ac.y * lb - ab.y * lc) / d, a.y + (ab.x * lc - ac.x * lb) / d};
}

std::vector<Vec2> chart_positions(const PhylloPattern& p) {
    std::vector<Vec2> out;
    out.reserve(p.sites.size());
    for (const auto& s : p.sites) out.push_back(s.xy);
    return out;
}

void build_links(Tessellation& t) {
    const PhylloPattern& p = t.pattern;
    const double scale = p.length_scale();
    t.adjacency.assign(p.sites.size(), {});
    for (const auto& cell : t.cells) {
        auto& links = t.adjacency[static_cast<std::size_t>(cell.s)];
        for (long nb : cell.ring) {
            NeighborLink l;
            l.from = cell.s;
            l.to = nb;
            l.delta_s = nb - cell.s;
            const Site& a = p.sites[static_cast<std::size_t>(cell.s)];
            const Site& b = p.sites[static_cast<std::size_t>(nb)];
            if (p.surface.kind == SurfaceKind::sphere)
                l.distance = great_circle_distance(p.surface.R, a.xyz, b.xyz);
            else
                l.distance = chart_distance(p.surface, a.xy, b.xy) / scale;
            l.rank = fibonacci_rank(std::labs(l.delta_s));
            if (l.rank < 0) l.rank = 0;
            links.push_back(l);
        }
        std::sort(links.begin(), links.end(),
                  [](const NeighborLink& x, const NeighborLink& y) { return x.delta_s < y.delta_s; });
    }
}

}  // namespace

Tessellation tessellate(const PhylloPattern& pattern, TessellationOptions options) {
    if (pattern.n < 4 || static_cast<long>(pattern.sites.size()) != pattern.n)
        throw std::invalid_argument("tessellate: pattern needs at least 4 sites");
    Tessellation t;
    t.pattern = pattern;
    const std::size_t n = pattern.sites.size();
    const bool sphere = pattern.surface.kind == SurfaceKind::sphere;
    const double scale = pattern.length_scale();

    if (sphere) {
        std::vector<Vec3> pts;
        pts.reserve(n);
        for (const auto& s : pattern.sites) pts.push_back(s.xyz);
        t.triangulation = sphere_hull(pts);
    } else {
        const auto pts = chart_positions(pattern);
        t.triangulation = delaunay_2d(pts);
        for (const auto& s : pattern.sites) t.outer_radius = std::max(t.outer_radius, norm(s.xy));
    }
    const Triangulation& tri = t.triangulation;

    // Voronoi vertices, one per finite face
    const std::size_t nf = tri.faces.size();
    std::vector<Vec2> center2(nf);
    std::vector<Vec3> center3(nf);
    std::vector<char> contained(nf, 1);
    for (std::size_t f = 0; f < nf; ++f) {
        if (tri.is_ghost(static_cast<int>(f))) continue;
        const auto& v = tri.faces[f];
        if (sphere) {
            const Vec3 a = pattern.sites[static_cast<std::size_t>(v[0])].xyz;
            const Vec3 b = pattern.sites[static_cast<std::size_t>(v[1])].xyz;
            const Vec3 c = pattern.sites[static_cast<std::size_t>(v[2])].xyz;
            center3[f] = pattern.surface.R * normalized(cross(b - a, c - a));
            const double denom = pattern.surface.R - center3[f].z;
            center2[f] = denom > 0 ? sphere_to_chart(pattern.surface.R, center3[f])
                                   : Vec2{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
        } else {
            const Vec2 a = pattern.sites[static_cast<std::size_t>(v[0])].xy;
            const Vec2 b = pattern.sites[static_cast<std::size_t>(v[1])].xy;
            const Vec2 c = pattern.sites[static_cast<std::size_t>(v[2])].xy;
            center2[f] = circumcenter(a, b, c);
            contained[f] = norm(center2[f]) + norm(a - center2[f]) <= t.outer_radius;
        }
    }

    t.cells.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
        VoronoiCell& cell = t.cells[s];
        cell.s = static_cast<long>(s);
        const long idx = static_cast<long>(s);
        cell.is_core = idx < options.core_size || (sphere && idx >= pattern.n - options.core_size);
        const auto around = tri.faces_around(static_cast<int>(s));
        // start right after a ghost face so an unbounded cell yields an open chain
        std::size_t start = 0;
        for (std::size_t k = 0; k < around.size(); ++k)
            if (tri.is_ghost(around[k])) {
                cell.unbounded = true;
                start = (k + 1) % around.size();
            }
        bool stable = !cell.unbounded;
        for (std::size_t k = 0; k < around.size(); ++k) {
            const int f = around[(start + k) % around.size()];
            const auto& v = tri.faces[static_cast<std::size_t>(f)];
            const int i = v[0] == static_cast<int>(s) ? 0 : (v[1] == static_cast<int>(s) ? 1 : 2);
            const int nb = v[static_cast<std::size_t>((i + 1) % 3)];
            if (nb != Triangulation::infinite) cell.ring.push_back(nb);
            if (tri.is_ghost(f)) continue;
            cell.polygon.push_back(center2[static_cast<std::size_t>(f)]);
            if (sphere) cell.polygon3d.push_back(center3[static_cast<std::size_t>(f)]);
            if (!contained[static_cast<std::size_t>(f)]) stable = false;
        }
        cell.sides = static_cast<int>(cell.ring.size());
        cell.is_boundary = !sphere && !stable;
        if (cell.is_boundary) continue;
        if (sphere) {
            cell.area = spherical_polygon_area(pattern.surface.R, pattern.sites[s].xyz, cell.polygon3d);
        } else {
            cell.area = chart_polygon_area(pattern.surface, cell.polygon) / (scale * scale);
        }
    }
    build_links(t);
    return t;
}

double cell_area(const Tessellation& tess, long s) {
    if (s < 0 || s >= tess.size()) throw std::out_of_range("cell_area: no such site");
    const VoronoiCell& c = tess.cells[static_cast<std::size_t>(s)];
    if (c.is_boundary) throw std::domain_error("cell_area: site " + std::to_string(s) + " is a boundary cell");
    return c.area;
}

const char* cell_class_name(CellClass c) {
    switch (c) {
        case CellClass::boundary: return "boundary";
        case CellClass::square: return "square";
        case CellClass::pentagon: return "pentagon";
        case CellClass::hexagon: return "hexagon";
        case CellClass::heptagon: return "heptagon";
        case CellClass::other: return "other";
    }
    return "other";
}

std::vector<CellClass> classify(const Tessellation& tess) {
    std::vector<CellClass> out;
    out.reserve(tess.cells.size());
    for (const auto& c : tess.cells) {
        if (c.is_boundary) {
            out.push_back(CellClass::boundary);
            continue;
        }
        switch (c.sides) {
            case 4: out.push_back(CellClass::square); break;
            case 5: out.push_back(CellClass::pentagon); break;
            case 6: out.push_back(CellClass::hexagon); break;
            case 7: out.push_back(CellClass::heptagon); break;
            default: out.push_back(CellClass::other); break;
        }
    }
    return out;
}

bool cell_contains(const Tessellation& tess, long s, Vec2 point) {
    const PhylloPattern& p = tess.pattern;
    if (p.surface.kind == SurfaceKind::sphere)
        return cell_contains(tess, s, chart_to_sphere(p.surface.R, point));
    const VoronoiCell& cell = tess.cells.at(static_cast<std::size_t>(s));
    const Vec2 site = p.sites[static_cast<std::size_t>(s)].xy;
    if (p.surface.kind == SurfaceKind::plane && !cell.unbounded) {
        const auto& poly = cell.polygon;
        for (std::size_t k = 0; k < poly.size(); ++k)
            if (cross(poly[(k + 1) % poly.size()] - poly[k], point - poly[k]) < 0) return false;
        return true;
    }
    // Half-planes (plane, unbounded cell) or geodesic bisectors (disc) against
    // every Delaunay neighbor.
    const double own = chart_distance(p.surface, point, site);
    for (long nb : cell.ring)
        if (chart_distance(p.surface, point, p.sites[static_cast<std::size_t>(nb)].xy) < own) return false;
    return true;
}

bool cell_contains(const Tessellation& tess, long s, Vec3 point) {
    const PhylloPattern& p = tess.pattern;
    if (p.surface.kind != SurfaceKind::sphere) throw std::invalid_argument("cell_contains: pattern is not spherical");
    const auto& poly = tess.cells.at(static_cast<std::size_t>(s)).polygon3d;
    for (std::size_t k = 0; k < poly.size(); ++k)
        if (dot(point, cross(poly[k], poly[(k + 1) % poly.size()])) < 0) return false;
    return true;
}

}  // namespace phyllo
