#include "phyllo/render.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "phyllo/io.hpp"

namespace phyllo {

Projection parse_projection(const std::string& name) {
    if (name == "auto") return Projection::automatic;
    if (name == "disc") return Projection::disc;
    if (name == "poincare") return Projection::poincare;
    if (name == "orthographic") return Projection::orthographic;
    if (name == "stereographic") return Projection::stereographic;
    throw std::invalid_argument("unsupported projection '" + name + "'");
}

const char* projection_name(Projection p) {
    switch (p) {
        case Projection::automatic: return "auto";
        case Projection::disc: return "disc";
        case Projection::poincare: return "poincare";
        case Projection::orthographic: return "orthographic";
        case Projection::stereographic: return "stereographic";
    }
    return "auto";
}

const char* cell_color(CellClass c) {
    switch (c) {
        case CellClass::pentagon: return "blue";
        case CellClass::hexagon: return "red";
        case CellClass::heptagon: return "green";
        case CellClass::square: return "yellow";
        default: return "gray";
    }
}

namespace {

Projection resolve(Projection p, SurfaceKind kind) {
    if (p == Projection::automatic) {
        switch (kind) {
            case SurfaceKind::plane: return Projection::disc;
            case SurfaceKind::hyperbolic: return Projection::poincare;
            case SurfaceKind::sphere: return Projection::orthographic;
        }
    }
    const bool ok = (kind == SurfaceKind::plane && p == Projection::disc) ||
                    (kind == SurfaceKind::hyperbolic && p == Projection::poincare) ||
                    (kind == SurfaceKind::sphere && (p == Projection::orthographic || p == Projection::stereographic));
    if (!ok)
        throw std::invalid_argument(std::string("projection '") + projection_name(p) + "' is not available for " +
                                    surface_name(kind) + " patterns");
    return p;
}

}  // namespace

std::string render_svg(const Tessellation& tess, const RenderOptions& options) {
    const PhylloPattern& p = tess.pattern;
    const Projection proj = resolve(options.projection, p.surface.kind);
    if (options.size <= 0) throw std::invalid_argument("render size must be positive");

    // maps a cell vertex to the unit square [-1, 1]^2, or nothing if it is not drawn
    double extent = 1.0;
    if (proj == Projection::disc) extent = tess.outer_radius > 0 ? 1.05 * tess.outer_radius : 1.0;
    if (proj == Projection::stereographic) extent = options.stereographic_clip;
    double clip = extent;
    // boundary cells that reach far past the last site are dropped rather than drawn as spikes
    if (proj == Projection::poincare) clip = std::min(1.0, 1.05 * tess.outer_radius);

    const double half = options.size / 2.0;
    const double margin = 0.96;
    auto to_px = [&](Vec2 q) { return Vec2{half + margin * half * q.x / extent, half - margin * half * q.y / extent}; };

    const auto classes = classify(tess);
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\"" << options.size
       << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\" data-geometry=\""
       << surface_name(p.surface.kind) << "\" data-projection=\"" << projection_name(proj) << "\" data-n=\"" << p.n
       << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"black\"/>\n";
    if (proj == Projection::poincare || proj == Projection::orthographic)
        os << "<circle class=\"limit\" cx=\"" << format_double(half) << "\" cy=\"" << format_double(half) << "\" r=\""
           << format_double(margin * half) << "\" fill=\"none\" stroke=\"white\" stroke-width=\"1\"/>\n";

    for (const auto& cell : tess.cells) {
        if (cell.unbounded) continue;
        std::vector<Vec2> pts;
        bool drawn = true;
        if (proj == Projection::orthographic) {
            // viewed from outside the pole of site 0, looking along +z
            const Vec3 site = p.sites[static_cast<std::size_t>(cell.s)].xyz;
            if (site.z > 0) continue;
            for (const auto& v : cell.polygon3d) pts.push_back((1.0 / p.surface.R) * Vec2{v.x, v.y});
        } else {
            for (const auto& v : cell.polygon) {
                if (!std::isfinite(v.x) || !std::isfinite(v.y) || norm(v) > clip) {
                    drawn = false;
                    break;
                }
                pts.push_back(v);
            }
        }
        if (!drawn || pts.size() < 3) continue;
        const CellClass cls = classes[static_cast<std::size_t>(cell.s)];
        const CellClass shown = cell.is_boundary ? (cell.sides == 4   ? CellClass::square
                                                    : cell.sides == 5 ? CellClass::pentagon
                                                    : cell.sides == 6 ? CellClass::hexagon
                                                    : cell.sides == 7 ? CellClass::heptagon
                                                                      : CellClass::other)
                                                 : cls;
        os << "<polygon class=\"" << cell_class_name(cls) << "\" data-s=\"" << cell.s << "\" fill=\""
           << cell_color(shown) << "\"";
        if (cell.is_boundary) os << " fill-opacity=\"0.35\"";
        os << " stroke=\"black\" stroke-width=\"0.5\" points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) {
            const Vec2 q = to_px(pts[k]);
            if (k) os << ' ';
            os << format_double(q.x) << ',' << format_double(q.y);
        }
        os << "\"/>\n";
    }

    // origin of the pattern: site 0 sits at the chart center in every view
    const double dot_r = std::max(2.0, options.size / 200.0);
    os << "<circle class=\"origin\" cx=\"" << format_double(half) << "\" cy=\"" << format_double(half) << "\" r=\""
       << format_double(dot_r) << "\" fill=\"white\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace phyllo
