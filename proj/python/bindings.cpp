#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "phyllo/analysis.hpp"
#include "phyllo/cli.hpp"
#include "phyllo/io.hpp"
#include "phyllo/render.hpp"

namespace py = pybind11;
using namespace phyllo;

namespace {

py::dict boundary_dict(const GrainBoundary& g, const Tessellation& t) {
    const DipoleAngles ang = dipole_angles(g, t);
    py::dict d;
    d["hemisphere"] = hemisphere_name(g.hemisphere);
    d["rank"] = g.rank;
    d["complete"] = g.complete;
    d["anomalous"] = g.anomalous;
    d["truncated"] = g.truncated;
    d["counts"] = py::make_tuple(g.heptagons, g.hexagons, g.pentagons);
    d["others"] = g.others;
    d["s_range"] = py::make_tuple(g.s_first, g.s_last);
    d["members"] = g.members;
    d["word"] = g.word.symbols;
    d["mean_radius"] = g.mean_radius;
    d["perimeter"] = g.perimeter;
    d["mean_abs_dipole_angle"] = ang.mean_abs;
    d["predicted_dipole_angle"] = ang.predicted;
    d["orientation"] = ang.orientation;
    return d;
}

Indexing parse_indexing(const std::string& name) {
    if (name == "integer") return Indexing::integer;
    if (name == "half-integer") return Indexing::half_integer;
    throw py::value_error("indexing must be 'integer' or 'half-integer'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Phyllotactic patterns and their Voronoi tessellations on the plane, the sphere and the hyperbolic plane";

    py::register_exception<DuplicateSitesError>(m, "DuplicateSitesError", PyExc_ValueError);

    m.def("fibonacci", &fibonacci, py::arg("u"));
    m.def("fibonacci_rank", &fibonacci_rank, py::arg("value"));
    m.def("golden_ratio", &golden_ratio);
    m.def("golden_divergence", &golden_divergence);
    m.def("inflate", [](const std::string& w) { return inflate(LSWord{w, true}).symbols; }, py::arg("word"));
    m.def("canonical_form", [](const std::string& w) { return canonical_form(w); }, py::arg("word"));
    m.def("strip_sequence", [](int u) {
        const StripSequence s = strip_sequence(u);
        py::dict d;
        d["rank"] = s.rank;
        d["counts"] = py::make_tuple(s.heptagons, s.hexagons, s.pentagons);
        d["word"] = s.word.symbols;
        d["dipoles"] = s.dipoles.size();
        return d;
    }, py::arg("u"));

    py::class_<Site>(m, "Site")
        .def_readonly("s", &Site::s)
        .def_property_readonly("rho", [](const Site& s) { return s.intrinsic.rho; })
        .def_property_readonly("theta", [](const Site& s) { return s.intrinsic.theta; })
        .def_property_readonly("phi", [](const Site& s) { return s.intrinsic.phi; })
        .def_property_readonly("r", [](const Site& s) { return s.chart.r; })
        .def_property_readonly("xy", [](const Site& s) { return py::make_tuple(s.xy.x, s.xy.y); })
        .def_property_readonly("xyz", [](const Site& s) { return py::make_tuple(s.xyz.x, s.xyz.y, s.xyz.z); });

    py::class_<PhylloPattern>(m, "Pattern")
        .def_property_readonly("geometry", [](const PhylloPattern& p) { return surface_name(p.surface.kind); })
        .def_readonly("n", &PhylloPattern::n)
        .def_property_readonly("R", [](const PhylloPattern& p) { return p.surface.R; })
        .def_property_readonly("a", [](const PhylloPattern& p) { return p.surface.a; })
        .def_property_readonly("lambda_", [](const PhylloPattern& p) { return p.surface.lambda; })
        .def_readonly("sites", &PhylloPattern::sites)
        .def("to_json", [](const PhylloPattern& p) { return dump_json(pattern_to_json(p)); })
        .def("to_csv", &pattern_to_csv)
        .def("__len__", [](const PhylloPattern& p) { return p.n; });

    m.def("generate_plane", [](long n, double a, double lambda, const std::string& indexing) {
        return generate_plane(n, a, lambda, parse_indexing(indexing));
    }, py::arg("n"), py::arg("a") = 1.0, py::arg("lambda_") = golden_divergence(), py::arg("indexing") = "integer");
    m.def("generate_hyperbolic", [](long n, double a, double lambda, const std::string& indexing) {
        return generate_hyperbolic(n, a, lambda, parse_indexing(indexing));
    }, py::arg("n"), py::arg("a") = 0.05, py::arg("lambda_") = golden_divergence(), py::arg("indexing") = "integer");
    m.def("generate_sphere", &generate_sphere, py::arg("n"), py::arg("lambda_") = golden_divergence());
    m.def("parse_pattern", &parse_pattern, py::arg("text"));

    py::class_<VoronoiCell>(m, "Cell")
        .def_readonly("s", &VoronoiCell::s)
        .def_readonly("sides", &VoronoiCell::sides)
        .def_readonly("area", &VoronoiCell::area)
        .def_readonly("is_boundary", &VoronoiCell::is_boundary)
        .def_readonly("is_core", &VoronoiCell::is_core)
        .def_readonly("ring", &VoronoiCell::ring);

    py::class_<Tessellation>(m, "Tessellation")
        .def_readonly("pattern", &Tessellation::pattern)
        .def_readonly("cells", &Tessellation::cells)
        .def("neighbors", [](const Tessellation& t, long s) {
            py::list out;
            for (const auto& l : t.neighbors(s))
                out.append(py::dict(py::arg("t") = l.to, py::arg("ds") = l.delta_s, py::arg("distance") = l.distance,
                                    py::arg("rank") = l.rank));
            return out;
        }, py::arg("s"))
        .def("classify", [](const Tessellation& t) {
            std::vector<std::string> out;
            for (CellClass c : classify(t)) out.emplace_back(cell_class_name(c));
            return out;
        })
        .def("contains", [](const Tessellation& t, long s, double x, double y) { return cell_contains(t, s, Vec2{x, y}); },
             py::arg("s"), py::arg("x"), py::arg("y"))
        .def("to_json", [](const Tessellation& t) { return dump_json(tessellation_to_json(t)); })
        .def("__len__", &Tessellation::size);

    m.def("tessellate", [](const PhylloPattern& p) { return tessellate(p); }, py::arg("pattern"));
    m.def("grain_boundaries", [](const Tessellation& t) {
        py::list out;
        for (const auto& g : detect_grain_boundaries(t)) out.append(boundary_dict(g, t));
        return out;
    }, py::arg("tessellation"));
    m.def("inflation_checks", [](const Tessellation& t) {
        py::list out;
        for (const auto& c : verify_inflation(detect_grain_boundaries(t)))
            out.append(py::make_tuple(hemisphere_name(c.hemisphere), c.from_rank, c.to_rank, c.holds));
        return out;
    }, py::arg("tessellation"));
    m.def("series_summary", [](const Tessellation& t) {
        const SeriesSummary s = full_series(t).summary;
        py::dict d;
        d["area_count"] = s.area_count;
        d["mean_area"] = s.mean_area;
        d["stddev_area"] = s.stddev_area;
        d["distance_count"] = s.distance_count;
        d["min_distance"] = s.min_distance;
        d["max_distance"] = s.max_distance;
        d["analytic_count"] = s.analytic_count;
        d["max_relative_error"] = s.max_relative_error;
        return d;
    }, py::arg("tessellation"));
    m.def("check_invariants", [](const Tessellation& t) {
        const auto b = detect_grain_boundaries(t);
        py::list out;
        for (const auto& c : check_invariants(t, b, full_series(t))) out.append(py::make_tuple(c.name, c.passed, c.detail));
        return out;
    }, py::arg("tessellation"));
    m.def("topological_charge", &topological_charge, py::arg("tessellation"));
    m.def("equatorial_defects", &equatorial_defects, py::arg("tessellation"));
    m.def("sphere_thresholds", &sphere_thresholds, py::arg("u_max"));
    m.def("boundary_polar_angle", &boundary_polar_angle, py::arg("u"), py::arg("nu"));
    m.def("minimal_distance", &minimal_distance, py::arg("u"));
    m.def("render_svg", [](const Tessellation& t, const std::string& projection, int size) {
        RenderOptions o;
        o.projection = parse_projection(projection);
        o.size = size;
        return render_svg(t, o);
    }, py::arg("tessellation"), py::arg("projection") = "auto", py::arg("size") = 800);

    m.def("run_cli", [](std::vector<std::string> args) {
        std::vector<const char*> argv{"phyllo"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
