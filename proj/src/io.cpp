#include "phyllo/io.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace phyllo {

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

void dump_into(const Json& j, std::string& out, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad + Json(it.key()).dump() + ": ";
                dump_into(it.value(), out, depth + 1);
            }
            out += "\n" + close_pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // arrays of scalars stay on one line
            bool flat = true;
            for (const auto& e : j)
                if (e.is_structured()) flat = false;
            if (flat) {
                out += "[";
                for (std::size_t k = 0; k < j.size(); ++k) {
                    if (k) out += ", ";
                    dump_into(j[k], out, depth + 1);
                }
                out += "]";
                return;
            }
            out += "[\n";
            for (std::size_t k = 0; k < j.size(); ++k) {
                if (k) out += ",\n";
                out += pad;
                dump_into(j[k], out, depth + 1);
            }
            out += "\n" + close_pad + "]";
            return;
        }
        case Json::value_t::number_float: out += format_double(j.get<double>()); return;
        default: out += j.dump(); return;
    }
}

Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

double reduce_angle(double theta) {
    double t = std::fmod(theta, 2.0 * std::numbers::pi);
    if (t < 0) t += 2.0 * std::numbers::pi;
    return t;
}

std::string csv_double(double v) { return std::isfinite(v) ? format_double(v) : std::string(); }

}  // namespace

std::string dump_json(const Json& j) {
    std::string out;
    dump_into(j, out, 0);
    out += "\n";
    return out;
}

Json pattern_to_json(const PhylloPattern& p) {
    Json j;
    j["schema_version"] = schema_version;
    j["surface"] = {{"kind", surface_name(p.surface.kind)},
                    {"R", number_or_null(p.surface.R)},
                    {"a", p.surface.a},
                    {"lambda", p.surface.lambda}};
    j["n"] = p.n;
    j["indexing"] = p.indexing == Indexing::integer ? "integer" : "half-integer";
    Json sites = Json::array();
    for (const auto& s : p.sites) {
        Json e;
        e["s"] = s.s;
        e["rho"] = s.intrinsic.rho;
        e["theta"] = reduce_angle(s.intrinsic.theta);
        e["r"] = number_or_null(s.chart.r);
        if (p.surface.kind == SurfaceKind::sphere) {
            e["phi"] = s.intrinsic.phi;
            e["xyz"] = {s.xyz.x, s.xyz.y, s.xyz.z};
        }
        sites.push_back(std::move(e));
    }
    j["sites"] = std::move(sites);
    return j;
}

PhylloPattern pattern_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("surface") || !j.contains("n") || !j.contains("sites"))
        throw std::runtime_error("pattern file: expected an object with surface, n and sites");
    const Json& surf = j.at("surface");
    const SurfaceKind kind = parse_surface(surf.at("kind").get<std::string>());
    const long n = j.at("n").get<long>();
    const double a = surf.at("a").get<double>();
    const double lambda = surf.at("lambda").get<double>();
    Indexing indexing = Indexing::integer;
    if (j.contains("indexing") && j.at("indexing").get<std::string>() == "half-integer")
        indexing = Indexing::half_integer;

    PhylloPattern p;
    switch (kind) {
        case SurfaceKind::plane: p = generate_plane(n, a, lambda, indexing); break;
        case SurfaceKind::hyperbolic: p = generate_hyperbolic(n, a, lambda, indexing); break;
        case SurfaceKind::sphere: p = generate_sphere(n, lambda); break;
    }
    const Json& sites = j.at("sites");
    if (!sites.is_array() || static_cast<long>(sites.size()) != n)
        throw std::runtime_error("pattern file: sites array does not hold n entries");
    auto check = [](double stored, double expected, long s, const char* field) {
        const double tol = 1e-9 * std::max(1.0, std::fabs(expected));
        if (!(std::fabs(stored - expected) <= tol))
            throw std::runtime_error("pattern file: site " + std::to_string(s) + " field '" + field +
                                     "' disagrees with the surface parameters");
    };
    for (long s = 0; s < n; ++s) {
        const Json& e = sites[static_cast<std::size_t>(s)];
        const Site& ref = p.sites[static_cast<std::size_t>(s)];
        if (e.at("s").get<long>() != s) throw std::runtime_error("pattern file: sites out of index order at " + std::to_string(s));
        check(e.at("rho").get<double>(), ref.intrinsic.rho, s, "rho");
        const double dtheta = std::remainder(e.at("theta").get<double>() - ref.intrinsic.theta, 2.0 * std::numbers::pi);
        check(dtheta, 0.0, s, "theta");
    }
    return p;
}

PhylloPattern parse_pattern(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::runtime_error(std::string("pattern file: ") + e.what());
    }
    try {
        return pattern_from_json(j);
    } catch (const Json::exception& e) {
        throw std::runtime_error(std::string("pattern file: ") + e.what());
    }
}

std::string pattern_to_csv(const PhylloPattern& p) {
    std::ostringstream os;
    os << "s,rho,theta,r,phi,x,y,z\n";
    const bool sphere = p.surface.kind == SurfaceKind::sphere;
    for (const auto& s : p.sites) {
        os << s.s << ',' << format_double(s.intrinsic.rho) << ',' << format_double(reduce_angle(s.intrinsic.theta))
           << ',' << csv_double(s.chart.r) << ',' << (sphere ? format_double(s.intrinsic.phi) : std::string()) << ',';
        if (sphere)
            os << format_double(s.xyz.x) << ',' << format_double(s.xyz.y) << ',' << format_double(s.xyz.z);
        else
            os << ",,";
        os << '\n';
    }
    return os.str();
}

Json tessellation_to_json(const Tessellation& tess) {
    const auto classes = classify(tess);
    Json j;
    j["schema_version"] = schema_version;
    j["geometry"] = surface_name(tess.pattern.surface.kind);
    j["n"] = tess.pattern.n;
    Json cells = Json::array();
    for (const auto& c : tess.cells) {
        Json e;
        e["s"] = c.s;
        e["sides"] = c.sides;
        e["class"] = cell_class_name(classes[static_cast<std::size_t>(c.s)]);
        e["boundary"] = c.is_boundary;
        e["core"] = c.is_core;
        e["area"] = number_or_null(c.area);
        Json verts = Json::array();
        for (const auto& v : c.polygon) verts.push_back({number_or_null(v.x), number_or_null(v.y)});
        e["vertices"] = std::move(verts);
        if (!c.polygon3d.empty()) {
            Json v3 = Json::array();
            for (const auto& v : c.polygon3d) v3.push_back({v.x, v.y, v.z});
            e["vertices3d"] = std::move(v3);
        }
        Json nbs = Json::array();
        for (const auto& l : tess.neighbors(c.s)) {
            Json ln;
            ln["t"] = l.to;
            ln["ds"] = l.delta_s;
            ln["distance"] = l.distance;
            ln["rank"] = l.rank > 0 ? Json(l.rank) : Json(nullptr);
            nbs.push_back(std::move(ln));
        }
        e["neighbors"] = std::move(nbs);
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    return j;
}

Json boundary_to_json(const GrainBoundary& g, const Tessellation& tess) {
    const DipoleAngles ang = dipole_angles(g, tess);
    Json j;
    j["hemisphere"] = hemisphere_name(g.hemisphere);
    j["rank"] = g.rank;
    j["complete"] = g.complete;
    j["anomalous"] = g.anomalous;
    j["truncated"] = g.truncated;
    j["counts"] = {{"heptagons", g.heptagons}, {"hexagons", g.hexagons}, {"pentagons", g.pentagons}, {"others", g.others}};
    j["s_range"] = {g.s_first, g.s_last};
    j["hexagon_range"] = g.hex_first >= 0 ? Json{g.hex_first, g.hex_last} : Json(nullptr);
    j["mean_radius"] = g.mean_radius;
    j["perimeter"] = g.perimeter;
    j["predicted_perimeter"] = g.rank >= 1 ? Json(boundary_perimeter_prediction(g.rank)) : Json(nullptr);
    j["word"] = g.word.symbols;
    j["mean_abs_dipole_angle"] = ang.mean_abs;
    j["predicted_dipole_angle"] = ang.predicted;
    j["orientation"] = ang.orientation;
    j["members"] = g.members;
    Json dips = Json::array();
    for (const auto& d : g.dipoles) dips.push_back({d.heptagon, d.pentagon});
    j["dipoles"] = std::move(dips);
    return j;
}

Json series_to_json(const SeriesReport& r) {
    Json j;
    j["geometry"] = surface_name(r.geometry);
    const auto& s = r.summary;
    j["summary"] = {{"area_count", s.area_count},
                    {"mean_area", s.mean_area},
                    {"stddev_area", s.stddev_area},
                    {"distance_count", s.distance_count},
                    {"min_distance", s.min_distance},
                    {"max_distance", s.max_distance},
                    {"analytic_count", s.analytic_count},
                    {"max_relative_error", s.max_relative_error}};
    Json sites = Json::array();
    for (const auto& site : r.sites) {
        Json e;
        e["s"] = site.s;
        e["sides"] = site.sides;
        e["boundary"] = site.boundary;
        e["core"] = site.core;
        e["area"] = number_or_null(site.area);
        Json links = Json::array();
        for (const auto& l : site.links)
            links.push_back({{"t", l.to},
                             {"ds", l.delta_s},
                             {"rank", l.rank},
                             {"distance", l.distance},
                             {"analytic", number_or_null(l.analytic)}});
        e["links"] = std::move(links);
        sites.push_back(std::move(e));
    }
    j["sites"] = std::move(sites);
    return j;
}

std::string boundary_csv_header() {
    return "hemisphere,rank,complete,anomalous,truncated,heptagons,hexagons,pentagons,others,s_first,s_last,hex_first,hex_last,"
           "dipoles,word,mean_radius,perimeter,predicted_perimeter,mean_abs_dipole_angle,predicted_dipole_angle,"
           "orientation";
}

std::string boundaries_to_csv(const std::vector<GrainBoundary>& boundaries, const Tessellation& tess) {
    std::ostringstream os;
    os << boundary_csv_header() << '\n';
    for (const auto& g : boundaries) {
        const DipoleAngles ang = dipole_angles(g, tess);
        os << hemisphere_name(g.hemisphere) << ',' << g.rank << ',' << (g.complete ? 1 : 0) << ','
           << (g.anomalous ? 1 : 0) << ',' << (g.truncated ? 1 : 0) << ',' << g.heptagons << ',' << g.hexagons << ',' << g.pentagons << ','
           << g.others << ',' << g.s_first << ',' << g.s_last << ',';
        if (g.hex_first >= 0)
            os << g.hex_first << ',' << g.hex_last << ',';
        else
            os << ",,";
        os << g.dipoles.size() << ',' << g.word.symbols << ',' << format_double(g.mean_radius) << ','
           << format_double(g.perimeter) << ','
           << (g.rank >= 1 ? format_double(boundary_perimeter_prediction(g.rank)) : std::string()) << ','
           << format_double(ang.mean_abs) << ',' << format_double(ang.predicted) << ',' << ang.orientation << '\n';
    }
    return os.str();
}

std::string series_csv_header() {
    std::string h = "s,sides,boundary,core,area,links";
    for (int k = 1; k <= 5; ++k) {
        const std::string n = std::to_string(k);
        h += ",ds_" + n + ",rank_" + n + ",distance_" + n + ",analytic_" + n;
    }
    return h;
}

std::string series_to_csv(const SeriesReport& r) {
    std::ostringstream os;
    os << series_csv_header() << '\n';
    for (const auto& site : r.sites) {
        os << site.s << ',' << site.sides << ',' << (site.boundary ? 1 : 0) << ',' << (site.core ? 1 : 0) << ','
           << csv_double(site.area) << ',' << site.links.size();
        for (std::size_t k = 0; k < 5; ++k) {
            if (k < site.links.size()) {
                const auto& l = site.links[k];
                os << ',' << l.delta_s << ',' << l.rank << ',' << format_double(l.distance) << ','
                   << csv_double(l.analytic);
            } else {
                os << ",,,,";
            }
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace phyllo
