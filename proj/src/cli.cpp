#include "phyllo/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "phyllo/analysis.hpp"
#include "phyllo/io.hpp"
#include "phyllo/render.hpp"

namespace phyllo {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PatternOptions {
    std::string input;
    std::string geometry = "plane";
    long n = 0;
    std::optional<double> a;
    std::string lambda = "golden";
    std::string indexing = "integer";
};

struct OutputOptions {
    std::string out;
    std::string format = "json";
};

void add_pattern_options(CLI::App* cmd, PatternOptions& p, bool allow_input) {
    if (allow_input) cmd->add_option("--in", p.input, "Pattern JSON written by `phyllo generate`");
    cmd->add_option("--geometry", p.geometry, "plane, hyperbolic or sphere")
        ->check(CLI::IsMember({"plane", "hyperbolic", "sphere"}));
    cmd->add_option("--n", p.n, "Number of sites")->check(CLI::PositiveNumber);
    cmd->add_option("--a", p.a, "Metric scale (plane default 1, hyperbolic default 0.05)");
    cmd->add_option("--lambda", p.lambda, "Divergence as a number or the keyword golden");
    cmd->add_option("--indexing", p.indexing, "integer or half-integer (plane and hyperbolic)")
        ->check(CLI::IsMember({"integer", "half-integer"}));
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--out", o.out, "Output path (stdout when omitted)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

double parse_lambda(const std::string& text) {
    if (text == "golden") return golden_divergence();
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || !std::isfinite(v)) throw UsageError("--lambda: expected a number or 'golden', got '" + text + "'");
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

// "<dir>/<stem>.<tag>.csv" next to the main output
std::string sibling_path(const std::string& path, const std::string& tag) {
    std::filesystem::path p(path);
    return (p.parent_path() / (p.stem().string() + "." + tag + ".csv")).string();
}

PhylloPattern build_pattern(const PatternOptions& p) {
    if (!p.input.empty()) {
        try {
            return parse_pattern(read_file(p.input));
        } catch (const UsageError&) {
            throw;
        } catch (const std::exception& e) {
            throw UsageError(p.input + ": " + e.what());
        }
    }
    if (p.n <= 0) throw UsageError("--n is required when no --in pattern is given");
    const SurfaceKind kind = parse_surface(p.geometry);
    const double lambda = parse_lambda(p.lambda);
    const Indexing indexing = p.indexing == "half-integer" ? Indexing::half_integer : Indexing::integer;
    try {
        switch (kind) {
            case SurfaceKind::plane: return generate_plane(p.n, p.a.value_or(1.0), lambda, indexing);
            case SurfaceKind::hyperbolic: return generate_hyperbolic(p.n, p.a.value_or(0.05), lambda, indexing);
            case SurfaceKind::sphere:
                if (p.a) throw UsageError("--a does not apply to the sphere; its radius follows from n");
                if (indexing != Indexing::integer) throw UsageError("--indexing half-integer is not available on the sphere");
                return generate_sphere(p.n, lambda);
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown geometry");
}

int cmd_generate(const PatternOptions& po, const OutputOptions& oo, std::ostream& out, std::ostream& err) {
    const PhylloPattern p = build_pattern(po);
    const std::string text = oo.format == "csv" ? pattern_to_csv(p) : dump_json(pattern_to_json(p));
    write_text(oo.out, text, out);
    std::ostream& info = oo.out.empty() ? err : out;
    // hexagonal spacing for a mean cell area of pi, in the pattern's own length unit
    const double spacing = std::sqrt(2.0 * std::numbers::pi / std::sqrt(3.0)) * p.length_scale();
    info << "geometry " << surface_name(p.surface.kind) << "\n"
         << "n " << p.n << "\n"
         << "R " << format_double(p.surface.R) << "\n"
         << "a " << format_double(p.surface.a) << "\n"
         << "lambda " << format_double(p.surface.lambda) << "\n"
         << "mean_spacing " << format_double(spacing) << "\n";
    return exit_ok;
}

struct RadiusStep {
    Hemisphere hemisphere;
    int from_rank;
    int to_rank;
    double width;
    double ratio;
};

std::vector<RadiusStep> radius_steps(const std::vector<GrainBoundary>& boundaries) {
    std::vector<RadiusStep> out;
    for (Hemisphere h : {Hemisphere::origin, Hemisphere::antipode}) {
        const GrainBoundary* prev = nullptr;
        for (const auto& g : boundaries) {
            if (g.hemisphere != h || !g.complete) continue;
            if (prev)
                out.push_back({h, prev->rank, g.rank, g.mean_radius - prev->mean_radius, g.mean_radius / prev->mean_radius});
            prev = &g;
        }
    }
    return out;
}

int cmd_analyze(const PatternOptions& po, const OutputOptions& oo, const std::string& cells_path, std::ostream& out,
                std::ostream& err) {
    const PhylloPattern p = build_pattern(po);
    const Tessellation tess = tessellate(p);
    const auto boundaries = detect_grain_boundaries(tess);
    const auto inflation = verify_inflation(boundaries);
    const SeriesReport series = full_series(tess);
    const auto checks = check_invariants(tess, boundaries, series);
    const auto steps = radius_steps(boundaries);

    if (!cells_path.empty()) write_text(cells_path, dump_json(tessellation_to_json(tess)), out);

    if (!oo.out.empty()) {
        if (oo.format == "csv") {
            write_text(oo.out, boundaries_to_csv(boundaries, tess), out);
            write_text(sibling_path(oo.out, "series"), series_to_csv(series), out);
        } else {
            Json j;
            j["schema_version"] = schema_version;
            j["geometry"] = surface_name(p.surface.kind);
            j["n"] = p.n;
            j["surface"] = pattern_to_json(p)["surface"];
            Json bj = Json::array();
            for (const auto& g : boundaries) bj.push_back(boundary_to_json(g, tess));
            j["boundaries"] = std::move(bj);
            Json ij = Json::array();
            for (const auto& c : inflation)
                ij.push_back({{"hemisphere", hemisphere_name(c.hemisphere)},
                              {"from_rank", c.from_rank},
                              {"to_rank", c.to_rank},
                              {"holds", c.holds}});
            j["inflation"] = std::move(ij);
            Json sj = Json::array();
            for (const auto& st : steps)
                sj.push_back({{"hemisphere", hemisphere_name(st.hemisphere)},
                              {"from_rank", st.from_rank},
                              {"to_rank", st.to_rank},
                              {"width", st.width},
                              {"ratio", st.ratio}});
            j["radius_steps"] = std::move(sj);
            j["series"] = series_to_json(series);
            Json cj = Json::array();
            for (const auto& c : checks) cj.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            j["checks"] = std::move(cj);
            write_text(oo.out, dump_json(j), out);
        }
    }

    std::ostream& info = oo.out == "-" ? err : out;
    info << "geometry " << surface_name(p.surface.kind) << " n " << p.n << "\n";
    for (const auto& g : boundaries) {
        info << "ring " << hemisphere_name(g.hemisphere) << " rank " << g.rank << " (" << g.heptagons << ","
             << g.hexagons << "," << g.pentagons << ")";
        if (g.others) info << " +" << g.others << " other";
        info << (g.complete ? " complete" : g.anomalous ? " anomalous" : g.truncated ? " truncated" : " incomplete") << " s " << g.s_first << ".."
             << g.s_last << " word " << g.word.symbols << "\n";
    }
    for (const auto& st : steps)
        info << "step " << hemisphere_name(st.hemisphere) << " " << st.from_rank << "->" << st.to_rank << " width "
             << format_double(st.width) << " ratio " << format_double(st.ratio) << "\n";
    info << "area mean " << format_double(series.summary.mean_area) << " stddev "
         << format_double(series.summary.stddev_area) << " over " << series.summary.area_count << " cells\n";
    bool all = true;
    for (const auto& c : checks) {
        info << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
        all = all && c.passed;
    }
    return all ? exit_ok : exit_anomaly;
}

int cmd_thresholds(int u_max, bool empirical, long n_cap, const OutputOptions& oo, std::ostream& out,
                   std::ostream& err) {
    const auto list = sphere_thresholds(u_max);

    struct Row {
        int u;
        long f;
        long threshold;
        long below = 0, above = 0;
        long rings_below = -1, rings_above = -1;
        long defects_below = -1, defects_above = -1;
        bool confirmed = false;
    };
    std::vector<Row> rows;
    for (int u = 1; u <= u_max; ++u) rows.push_back({u, fibonacci(2 * u + 1), list[static_cast<std::size_t>(u - 1)]});

    // The rounded threshold is asymptotic: a new ring shows up within a few
    // sites above it. Spheres smaller than two cores hold no ring at all.
    const long smallest = 2 * TessellationOptions{}.core_size + 1;
    if (empirical) {
        for (auto& r : rows) {
            r.below = r.threshold % 2 ? r.threshold - 2 : r.threshold - 1;
            r.above = r.threshold % 2 ? r.threshold + 4 : r.threshold + 3;
            if (r.below >= smallest && r.above > n_cap)
                throw UsageError("empirical mode needs n = " + std::to_string(r.above) + ", above the cap of " +
                                 std::to_string(n_cap) + " (raise --n-cap or lower --u-max)");
        }
        for (auto& r : rows) {
            if (r.below < smallest) continue;
            const Tessellation lo = tessellate(generate_sphere(r.below));
            const Tessellation hi = tessellate(generate_sphere(r.above));
            r.rings_below = static_cast<long>(detect_grain_boundaries(lo).size());
            r.rings_above = static_cast<long>(detect_grain_boundaries(hi).size());
            r.defects_below = equatorial_defects(lo);
            r.defects_above = equatorial_defects(hi);
            r.confirmed = r.rings_above > r.rings_below;
        }
    }

    // polar angle curves, each from its threshold up to ten times the last threshold
    struct Point {
        int u;
        long n;
        double phi;
    };
    std::vector<Point> curves;
    const long n_top = 10 * rows.back().threshold + 1;
    for (const auto& r : rows) {
        const double lo = std::log(static_cast<double>(std::max<long>(r.threshold, 3)));
        const double hi = std::log(static_cast<double>(n_top));
        long last = -1;
        for (int k = 0; k <= 64; ++k) {
            long n = static_cast<long>(std::llround(std::exp(lo + (hi - lo) * k / 64.0)));
            if (n % 2 == 0) ++n;
            if (n <= last) continue;
            const long nu = (n - 1) / 2;
            const double x = static_cast<double>(r.f) / (static_cast<double>(n) * std::numbers::pi);
            if (x > 1.0) continue;
            curves.push_back({r.u, n, boundary_polar_angle(r.u, nu)});
            last = n;
        }
    }

    if (oo.format == "csv") {
        std::ostringstream t;
        t << "u,f_2u_plus_1,threshold"
          << (empirical ? ",n_below,rings_below,defects_below,n_above,rings_above,defects_above,confirmed" : "")
          << "\n";
        for (const auto& r : rows) {
            t << r.u << ',' << r.f << ',' << r.threshold;
            if (empirical) {
                if (r.defects_below < 0)
                    t << ",,,,,,,";
                else
                    t << ',' << r.below << ',' << r.rings_below << ',' << r.defects_below << ',' << r.above << ','
                      << r.rings_above << ',' << r.defects_above << ',' << (r.confirmed ? 1 : 0);
            }
            t << '\n';
        }
        std::ostringstream c;
        c << "u,n,phi\n";
        for (const auto& pt : curves) c << pt.u << ',' << pt.n << ',' << format_double(pt.phi) << '\n';
        write_text(oo.out, t.str(), out);
        if (!oo.out.empty() && oo.out != "-") write_text(sibling_path(oo.out, "curves"), c.str(), out);
    } else {
        Json j;
        j["schema_version"] = schema_version;
        Json tj = Json::array();
        for (const auto& r : rows) {
            Json e;
            e["u"] = r.u;
            e["f_2u_plus_1"] = r.f;
            e["threshold"] = r.threshold;
            if (empirical && r.defects_below >= 0) {
                e["n_below"] = r.below;
                e["rings_below"] = r.rings_below;
                e["defects_below"] = r.defects_below;
                e["n_above"] = r.above;
                e["rings_above"] = r.rings_above;
                e["defects_above"] = r.defects_above;
                e["confirmed"] = r.confirmed;
            }
            tj.push_back(std::move(e));
        }
        j["thresholds"] = std::move(tj);
        Json cj = Json::array();
        for (const auto& pt : curves) cj.push_back({{"u", pt.u}, {"n", pt.n}, {"phi", pt.phi}});
        j["curves"] = std::move(cj);
        write_text(oo.out, dump_json(j), out);
    }

    std::ostream& info = oo.out.empty() || oo.out == "-" ? err : out;
    bool all = true;
    for (const auto& r : rows) {
        info << "u " << r.u << " threshold " << r.threshold;
        if (empirical && r.defects_below >= 0) {
            info << " rings " << r.below << ":" << r.rings_below << " " << r.above << ":" << r.rings_above
                 << " equatorial defects " << r.defects_below << " " << r.defects_above
                 << (r.confirmed ? " confirmed" : " not confirmed");
            all = all && r.confirmed;
        }
        info << "\n";
    }
    return all ? exit_ok : exit_anomaly;
}

int cmd_render(const PatternOptions& po, const std::string& out_path, const std::string& projection, int size,
               std::ostream& out) {
    RenderOptions ro;
    try {
        ro.projection = parse_projection(projection);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    ro.size = size;
    const PhylloPattern p = build_pattern(po);
    const Tessellation tess = tessellate(p);
    std::string svg;
    try {
        svg = render_svg(tess, ro);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    write_text(out_path, svg, out);
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Phyllotactic patterns on the plane, the sphere and the hyperbolic plane", "phyllo"};
    app.require_subcommand(1);

    PatternOptions gen_p;
    OutputOptions gen_o;
    auto* gen = app.add_subcommand("generate", "Place the sites of a pattern");
    add_pattern_options(gen, gen_p, false);
    add_output_options(gen, gen_o);

    PatternOptions an_p;
    OutputOptions an_o;
    std::string cells_path;
    auto* an = app.add_subcommand("analyze", "Tessellate a pattern and run the ring and distance analysis");
    add_pattern_options(an, an_p, true);
    add_output_options(an, an_o);
    an->add_option("--cells", cells_path, "Also write the tessellation as JSON");

    int u_max = 10;
    bool empirical = false;
    long n_cap = 10001;
    OutputOptions th_o;
    auto* th = app.add_subcommand("thresholds", "Sphere sizes at which a new ring appears");
    th->add_option("--u-max", u_max, "Largest rank")->check(CLI::Range(1, 20));
    th->add_flag("--empirical", empirical, "Tessellate spheres on both sides of each threshold");
    th->add_option("--n-cap", n_cap, "Largest sphere the empirical mode may build")->check(CLI::PositiveNumber);
    add_output_options(th, th_o);

    PatternOptions re_p;
    std::string re_out;
    std::string projection = "auto";
    int size = 800;
    auto* re = app.add_subcommand("render", "Draw the tessellation as SVG");
    add_pattern_options(re, re_p, true);
    re->add_option("--out", re_out, "SVG path (stdout when omitted)");
    re->add_option("--projection", projection, "auto, disc, poincare, orthographic or stereographic");
    re->add_option("--size", size, "Canvas size in pixels")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) return cmd_generate(gen_p, gen_o, out, err);
        if (*an) return cmd_analyze(an_p, an_o, cells_path, out, err);
        if (*th) return cmd_thresholds(u_max, empirical, n_cap, th_o, out, err);
        if (*re) return cmd_render(re_p, re_out, projection, size, out);
    } catch (const UsageError& e) {
        err << "phyllo: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "phyllo: " << e.what() << "\n";
        return exit_anomaly;
    }
    return exit_usage;
}

}  // namespace phyllo
