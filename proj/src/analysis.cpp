#include "phyllo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <cstdio>
#include <stdexcept>

namespace phyllo {

namespace {

constexpr double pi = std::numbers::pi;

bool on_sphere(const Tessellation& t) { return t.pattern.surface.kind == SurfaceKind::sphere; }

Hemisphere hemisphere_of(const Tessellation& t, long s) {
    if (!on_sphere(t)) return Hemisphere::origin;
    return s <= t.pattern.nu() ? Hemisphere::origin : Hemisphere::antipode;
}

// Site index counted from the pole of the given hemisphere.
long pole_index(const Tessellation& t, long s, Hemisphere h) {
    return h == Hemisphere::origin ? s : t.pattern.n - 1 - s;
}

double radial_coordinate(const Tessellation& t, long s, Hemisphere h) {
    const Site& site = t.pattern.sites[static_cast<std::size_t>(s)];
    if (!on_sphere(t)) return site.intrinsic.rho / t.pattern.length_scale();
    const double rho = site.intrinsic.rho;
    return h == Hemisphere::origin ? rho : pi * t.pattern.surface.R - rho;
}

double azimuth_of(Vec3 p) { return std::atan2(p.y, p.x); }
double azimuth_of(Vec2 p) { return std::atan2(p.y, p.x); }

double site_azimuth(const Tessellation& t, long s) {
    const Site& site = t.pattern.sites[static_cast<std::size_t>(s)];
    return on_sphere(t) ? azimuth_of(site.xyz) : azimuth_of(site.xy);
}

bool adjacent(const Tessellation& t, long a, long b) {
    const auto& ring = t.cells[static_cast<std::size_t>(a)].ring;
    return std::find(ring.begin(), ring.end(), b) != ring.end();
}

struct RingBuild {
    Hemisphere hemisphere = Hemisphere::origin;
    std::vector<long> heptagons, hexagons, pentagons, others;
    long grain_after = 0;   // hexagons met after the pentagons
    bool at_rim = false;    // still open when the walk ran out of interior cells
};

// Kuhn's augmenting paths over heptagon -> pentagon adjacency.
bool augment(long h, const std::map<long, std::vector<long>>& options, std::map<long, long>& owner,
             std::map<long, bool>& seen) {
    for (long p : options.at(h)) {
        if (seen[p]) continue;
        seen[p] = true;
        auto it = owner.find(p);
        if (it == owner.end() || augment(it->second, options, owner, seen)) {
            owner[p] = h;
            return true;
        }
    }
    return false;
}

std::vector<std::pair<long, long>> match_dipoles(const Tessellation& t, const RingBuild& ring) {
    std::map<long, std::vector<long>> options;
    std::map<long, int> shift_votes;
    for (long h : ring.heptagons) {
        auto& opts = options[h];
        for (long p : ring.pentagons)
            if (adjacent(t, h, p)) {
                opts.push_back(p);
                ++shift_votes[p - h];
            }
    }
    long shift = 0;
    int best = -1;
    for (const auto& [d, votes] : shift_votes)
        if (votes > best) {
            best = votes;
            shift = d;
        }
    // Most dipoles share one index separation; take those first and let
    // augmenting paths settle the rest.
    std::map<long, long> owner;   // pentagon -> heptagon
    for (long h : ring.heptagons) {
        auto& opts = options[h];
        std::stable_sort(opts.begin(), opts.end(), [&](long a, long b) { return (a - h == shift) > (b - h == shift); });
        if (!opts.empty() && opts.front() - h == shift && !owner.count(opts.front())) owner[opts.front()] = h;
    }
    std::map<long, bool> matched;
    for (const auto& [p, h] : owner) matched[h] = true;
    for (long h : ring.heptagons) {
        if (matched[h]) continue;
        std::map<long, bool> seen;
        if (augment(h, options, owner, seen)) matched[h] = true;
    }
    std::vector<std::pair<long, long>> out;
    for (const auto& [p, h] : owner) out.emplace_back(h, p);
    return out;
}

Dipole make_dipole(const Tessellation& t, long h, long p, Hemisphere hemi) {
    Dipole d;
    d.heptagon = h;
    d.pentagon = p;
    const Site& a = t.pattern.sites[static_cast<std::size_t>(h)];
    const Site& b = t.pattern.sites[static_cast<std::size_t>(p)];
    if (!on_sphere(t)) {
        const Vec2 m = 0.5 * (a.xy + b.xy);
        const Vec2 radial = (1.0 / norm(m)) * m;
        const Vec2 v = b.xy - a.xy;
        d.angle = std::atan2(cross(radial, v), dot(radial, v));
        d.azimuth = azimuth_of(m);
        return d;
    }
    const Vec3 m = normalized(a.xyz + b.xyz);
    const Vec3 pole = hemi == Hemisphere::origin ? Vec3{0, 0, -1} : Vec3{0, 0, 1};
    const Vec3 radial = normalized(dot(pole, m) * m - pole);
    Vec3 v = b.xyz - a.xyz;
    v = v - dot(v, m) * m;
    // viewed from inside at the origin pole, matching the chart orientation
    const Vec3 axis = hemi == Hemisphere::origin ? -1.0 * m : m;
    d.angle = std::atan2(dot(axis, cross(radial, v)), dot(radial, v));
    d.azimuth = azimuth_of(m);
    return d;
}

LSWord ring_word(const std::vector<Dipole>& dipoles, const std::vector<double>& hexagon_azimuths) {
    struct Event {
        double azimuth;
        bool hexagon;
    };
    std::vector<Event> events;
    for (const auto& d : dipoles) events.push_back({d.azimuth, false});
    for (double a : hexagon_azimuths) events.push_back({a, true});
    std::sort(events.begin(), events.end(), [](const Event& x, const Event& y) {
        if (x.azimuth != y.azimuth) return x.azimuth < y.azimuth;
        return x.hexagon && !y.hexagon;
    });
    LSWord w;
    w.cyclic = true;
    std::size_t start = 0;
    while (start < events.size() && !events[start].hexagon) ++start;
    if (start == events.size()) return w;
    int run = 0;
    for (std::size_t k = 1; k <= events.size(); ++k) {
        const Event& e = events[(start + k) % events.size()];
        if (!e.hexagon) {
            ++run;
            continue;
        }
        if (run > 0) w.symbols += run == 2 ? 'L' : (run == 1 ? 'S' : '?');
        run = 0;
    }
    return w;
}

int nearest_fibonacci_rank(long value) {
    int best = 2;
    for (int u = 2; u <= max_fib_rank; ++u) {
        if (std::labs(fibonacci(u) - value) < std::labs(fibonacci(best) - value)) best = u;
        if (fibonacci(u) > value) break;
    }
    return best;
}

GrainBoundary finish_ring(const Tessellation& t, const RingBuild& ring) {
    GrainBoundary g;
    g.hemisphere = ring.hemisphere;
    g.heptagons = static_cast<long>(ring.heptagons.size());
    g.hexagons = static_cast<long>(ring.hexagons.size());
    g.pentagons = static_cast<long>(ring.pentagons.size());
    g.others = static_cast<long>(ring.others.size());

    for (const auto* group : {&ring.heptagons, &ring.hexagons, &ring.pentagons, &ring.others})
        g.members.insert(g.members.end(), group->begin(), group->end());
    std::sort(g.members.begin(), g.members.end(),
              [&](long a, long b) { return site_azimuth(t, a) < site_azimuth(t, b); });

    g.s_first = std::numeric_limits<long>::max();
    g.s_last = std::numeric_limits<long>::min();
    double radius = 0;
    for (long s : g.members) {
        const long k = pole_index(t, s, g.hemisphere);
        g.s_first = std::min(g.s_first, k);
        g.s_last = std::max(g.s_last, k);
        radius += radial_coordinate(t, s, g.hemisphere);
    }
    g.mean_radius = g.members.empty() ? 0.0 : radius / static_cast<double>(g.members.size());
    SurfaceSpec normalized_surface = t.pattern.surface;
    g.perimeter = 2.0 * pi * circumference_radius(normalized_surface, g.mean_radius);
    for (long s : ring.hexagons) {
        const long k = pole_index(t, s, g.hemisphere);
        g.hex_first = g.hex_first < 0 ? k : std::min(g.hex_first, k);
        g.hex_last = std::max(g.hex_last, k);
    }

    const long p = g.pentagons;
    if (p < 1) {
        g.anomalous = true;
        g.rank = 0;
    } else {
        int rank = fibonacci_rank(p);
        if (rank < 0) rank = fibonacci_rank(p - 1) > 0 ? fibonacci_rank(p - 1) : fibonacci_rank(p + 1);
        if (rank < 0) {
            g.anomalous = true;
            rank = nearest_fibonacci_rank(p);
        }
        g.rank = rank;
    }
    g.complete = !g.anomalous && g.others == 0 && fibonacci_rank(p) == g.rank && g.heptagons == p &&
                 g.hexagons == fibonacci(g.rank - 1);
    // the rest of a ring cut by the rim lies among the boundary cells
    if (ring.at_rim && ring.grain_after == 0 && !g.complete) {
        g.truncated = true;
        g.anomalous = false;
        g.rank = nearest_fibonacci_rank(std::max(g.heptagons, g.pentagons));
    }

    for (const auto& [h, q] : match_dipoles(t, ring)) g.dipoles.push_back(make_dipole(t, h, q, g.hemisphere));
    std::sort(g.dipoles.begin(), g.dipoles.end(), [](const Dipole& a, const Dipole& b) { return a.azimuth < b.azimuth; });
    std::vector<double> hex_az;
    for (long s : ring.hexagons) hex_az.push_back(site_azimuth(t, s));
    g.word = ring_word(g.dipoles, hex_az);
    return g;
}

}  // namespace

const char* hemisphere_name(Hemisphere h) { return h == Hemisphere::origin ? "origin" : "antipode"; }

std::vector<GrainBoundary> detect_grain_boundaries(const Tessellation& tess) {
    const auto classes = classify(tess);
    std::vector<GrainBoundary> out;
    const std::vector<Hemisphere> hemis =
        on_sphere(tess) ? std::vector<Hemisphere>{Hemisphere::origin, Hemisphere::antipode}
                        : std::vector<Hemisphere>{Hemisphere::origin};
    for (Hemisphere h : hemis) {
        std::vector<long> order;
        for (long s = 0; s < tess.size(); ++s) {
            const auto& c = tess.cells[static_cast<std::size_t>(s)];
            if (c.is_core || c.is_boundary || hemisphere_of(tess, s) != h) continue;
            order.push_back(s);
        }
        std::sort(order.begin(), order.end(), [&](long a, long b) {
            const double ra = radial_coordinate(tess, a, h), rb = radial_coordinate(tess, b, h);
            if (ra != rb) return ra < rb;
            return pole_index(tess, a, h) < pole_index(tess, b, h);
        });

        // Walking outward, a ring is a run of heptagons, then its hexagons,
        // then its pentagons; hexagons after the pentagons belong to the grain.
        enum class Phase { grain, heptagon, hexagon, pentagon };
        Phase phase = Phase::grain;
        std::optional<RingBuild> ring;
        auto close = [&]() {
            if (ring) out.push_back(finish_ring(tess, *ring));
            ring.reset();
        };
        auto open = [&]() {
            close();
            ring = RingBuild{};
            ring->hemisphere = h;
        };
        for (long s : order) {
            switch (classes[static_cast<std::size_t>(s)]) {
                case CellClass::heptagon:
                    if (phase == Phase::grain || phase == Phase::pentagon) {
                        open();
                        phase = Phase::heptagon;
                    }
                    ring->heptagons.push_back(s);
                    break;
                case CellClass::hexagon:
                    if (phase == Phase::heptagon) phase = Phase::hexagon;
                    if (phase == Phase::hexagon) ring->hexagons.push_back(s);
                    if (phase == Phase::pentagon) ++ring->grain_after;
                    break;
                case CellClass::pentagon:
                    if (phase == Phase::grain) open();
                    phase = Phase::pentagon;
                    ring->pentagons.push_back(s);
                    break;
                default:
                    if (phase == Phase::grain) {
                        open();
                        phase = Phase::heptagon;
                    }
                    ring->others.push_back(s);
                    break;
            }
        }
        if (ring && !on_sphere(tess)) ring->at_rim = true;
        close();
    }
    return out;
}

std::vector<InflationCheck> verify_inflation(const std::vector<GrainBoundary>& boundaries) {
    std::vector<InflationCheck> out;
    for (Hemisphere h : {Hemisphere::origin, Hemisphere::antipode}) {
        const GrainBoundary* prev = nullptr;
        for (const auto& g : boundaries) {
            if (g.hemisphere != h || !g.complete) continue;
            if (prev) {
                InflationCheck c;
                c.from_rank = prev->rank;
                c.to_rank = g.rank;
                c.hemisphere = h;
                c.holds = prev->word.well_formed() && g.word.well_formed() && g.rank == prev->rank + 1 &&
                          equivalent_words(inflate(prev->word), g.word);
                out.push_back(c);
            }
            prev = &g;
        }
    }
    return out;
}

DipoleAngles dipole_angles(const GrainBoundary& boundary, const Tessellation& tess) {
    DipoleAngles out;
    if (boundary.rank >= 2) out.predicted = std::atan2(static_cast<double>(fibonacci(boundary.rank - 1)),
                                                       static_cast<double>(fibonacci(boundary.rank)));
    double sum = 0, sum_abs = 0;
    for (const auto& d : boundary.dipoles) {
        const Dipole fresh = make_dipole(tess, d.heptagon, d.pentagon, boundary.hemisphere);
        out.angles.push_back(fresh.angle);
        sum += fresh.angle;
        sum_abs += std::fabs(fresh.angle);
    }
    if (!out.angles.empty()) {
        out.mean_abs = sum_abs / static_cast<double>(out.angles.size());
        out.orientation = (sum > 0) - (sum < 0);
    }
    return out;
}

double boundary_perimeter_prediction(int u) {
    if (u < 1 || 2 * u + 1 > max_fib_rank)
        throw std::overflow_error("boundary_perimeter_prediction: rank " + std::to_string(u) + " out of range");
    return std::sqrt(static_cast<double>(fibonacci(2 * u + 1)) * pi);
}

double boundary_radius(const SurfaceSpec& surface, int u) {
    const double P = boundary_perimeter_prediction(u);
    switch (surface.kind) {
        case SurfaceKind::plane: return P / (2.0 * pi);
        case SurfaceKind::sphere: {
            const double x = P / (2.0 * pi * surface.R);
            if (x > 1.0) throw std::domain_error("boundary_radius: ring longer than a great circle");
            return surface.R * std::asin(x);
        }
        case SurfaceKind::hyperbolic: return surface.R * std::asinh(P / (2.0 * pi * surface.R));
    }
    return 0.0;
}

std::vector<long> sphere_thresholds(int u_max) {
    if (u_max < 1 || u_max > 40) throw std::out_of_range("sphere_thresholds: u_max outside [1, 40]");
    std::vector<long> out;
    for (int u = 1; u <= u_max; ++u) {
        const long double ratio = static_cast<long double>(fibonacci(2 * u + 1)) / std::numbers::pi_v<long double>;
        out.push_back(static_cast<long>(std::llround(ratio)));
    }
    return out;
}

double boundary_polar_angle(int u, long nu) {
    if (u < 1 || 2 * u + 1 > max_fib_rank) throw std::overflow_error("boundary_polar_angle: rank out of range");
    const double x = static_cast<double>(fibonacci(2 * u + 1)) / ((2.0 * static_cast<double>(nu) + 1.0) * pi);
    if (x > 1.0) throw std::domain_error("boundary_polar_angle: ring does not fit on this sphere");
    return std::asin(std::sqrt(x));
}

std::pair<long, long> grain_bounds_estimate(int u, long nu) {
    if (u < 2 || 2 * u + 1 > max_fib_rank) throw std::overflow_error("grain_bounds_estimate: rank out of range");
    const double x = static_cast<double>(fibonacci(2 * u + 1)) / ((2.0 * static_cast<double>(nu) + 1.0) * pi);
    if (x > 1.0) throw std::domain_error("grain_bounds_estimate: ring does not fit on this sphere");
    const double cap = static_cast<double>(nu) * (1.0 - std::sqrt(1.0 - x));
    const double f = static_cast<double>(fibonacci(u - 1));
    return {static_cast<long>(std::floor((5.0 - f) / 2.0 + cap)), static_cast<long>(std::floor((f + 3.0) / 2.0 + cap))};
}

long equatorial_defects(const Tessellation& tess) {
    if (!on_sphere(tess)) throw std::invalid_argument("equatorial_defects: pattern is not spherical");
    const double band = 0.5 * (pi / 2 - std::asin(1.0 / golden_ratio()));
    long count = 0;
    for (const auto& c : tess.cells) {
        const double lat = tess.pattern.sites[static_cast<std::size_t>(c.s)].intrinsic.phi;
        if (std::fabs(lat) <= band && c.sides != 6) ++count;
    }
    return count;
}

double analytic_distance(const SurfaceSpec& surface, double s, int u, long n) {
    if (!(s > 0)) throw std::domain_error("analytic_distance: s must be positive");
    if (u < 1 || u > max_fib_rank) throw std::out_of_range("analytic_distance: rank out of range");
    const double f = static_cast<double>(fibonacci(u));
    const double gamma = 2.0 * pi * (surface.lambda * f - static_cast<double>(fibonacci(u - 1)));
    double r = 0, dr = 0, factor = 1, scale = 1;
    switch (surface.kind) {
        case SurfaceKind::plane:
            r = std::sqrt(s);
            dr = 0.5 / r;
            break;
        case SurfaceKind::hyperbolic: {
            const double a = surface.a;
            const double x = 0.5 * a * a * s;
            r = std::sqrt(x / (x + 2.0));
            dr = a * a / (2.0 * r * (x + 2.0) * (x + 2.0));
            factor = 2.0 / (1.0 - r * r);
            scale = surface.R;
            break;
        }
        case SurfaceKind::sphere: {
            const double R = surface.R;
            const long count = n > 0 ? n : std::lround(4.0 * R * R);
            const double nu = static_cast<double>((count - 1) / 2);
            if (s >= 2.0 * nu) throw std::domain_error("analytic_distance: s at the projection pole");
            r = std::sqrt(s / (2.0 * nu - s));
            dr = nu / (r * (2.0 * nu - s) * (2.0 * nu - s));
            factor = 2.0 / (1.0 + r * r);
            scale = R;
            break;
        }
    }
    const double g = gamma / f;
    return scale * f * factor * std::sqrt(dr * dr + g * g * r * r);
}

double averaged_analytic_distance(const SurfaceSpec& surface, double s, int u, long n) {
    const double f = static_cast<double>(fibonacci(u));
    return 0.5 * (analytic_distance(surface, s, u, n) + analytic_distance(surface, s + f, u, n));
}

double minimal_distance(int u) {
    if (u < 2 || u > max_fib_rank) throw std::out_of_range("minimal_distance: rank out of range");
    const double f = static_cast<double>(fibonacci(u));
    return std::sqrt(2.0 * pi) * f *
           std::sqrt(std::fabs(1.0 / golden_ratio() - static_cast<double>(fibonacci(u - 1)) / f));
}

namespace {

void fill_sites(const Tessellation& tess, SeriesReport& report) {
    report.geometry = tess.pattern.surface.kind;
    report.sites.clear();
    for (const auto& c : tess.cells) {
        SiteSample s;
        s.s = c.s;
        s.sides = c.sides;
        s.boundary = c.is_boundary;
        s.core = c.is_core;
        report.sites.push_back(s);
    }
}

void fill_areas(const Tessellation& tess, SeriesReport& report) {
    double sum = 0;
    long count = 0;
    for (auto& site : report.sites) {
        const auto& c = tess.cells[static_cast<std::size_t>(site.s)];
        if (c.is_boundary) continue;
        site.area = c.area;
        sum += c.area;
        ++count;
    }
    const double mean = count ? sum / static_cast<double>(count) : 0.0;
    double var = 0;
    for (const auto& site : report.sites)
        if (!site.boundary) var += (site.area - mean) * (site.area - mean);
    report.summary.area_count = count;
    report.summary.mean_area = mean;
    report.summary.stddev_area = count ? std::sqrt(var / static_cast<double>(count)) : 0.0;
}

void fill_distances(const Tessellation& tess, SeriesReport& report) {
    auto& sum = report.summary;
    sum.min_distance = std::numeric_limits<double>::infinity();
    sum.max_distance = 0;
    for (auto& site : report.sites) {
        if (site.boundary || site.core) continue;
        const Hemisphere h = hemisphere_of(tess, site.s);
        const long ps = pole_index(tess, site.s, h);
        for (const auto& l : tess.neighbors(site.s)) {
            const auto& other = tess.cells[static_cast<std::size_t>(l.to)];
            if (other.is_boundary || other.is_core) continue;
            const bool outward = h == Hemisphere::origin ? l.delta_s > 0 : l.delta_s < 0;
            if (!outward) continue;
            LinkSample ls;
            ls.to = l.to;
            ls.delta_s = l.delta_s;
            ls.rank = l.rank;
            ls.distance = l.distance;
            if (l.rank > 0 &&
                static_cast<double>(ps) >= analytic_domain_factor * static_cast<double>(fibonacci(l.rank))) {
                ls.analytic = averaged_analytic_distance(tess.pattern.surface, static_cast<double>(ps), l.rank,
                                                         tess.pattern.n);
                sum.max_relative_error =
                    std::max(sum.max_relative_error, std::fabs(ls.analytic - ls.distance) / ls.distance);
                ++sum.analytic_count;
            }
            sum.min_distance = std::min(sum.min_distance, l.distance);
            sum.max_distance = std::max(sum.max_distance, l.distance);
            ++sum.distance_count;
            site.links.push_back(ls);
        }
    }
    if (sum.distance_count == 0) sum.min_distance = 0;
}

}  // namespace

SeriesReport distance_series(const Tessellation& tess) {
    SeriesReport r;
    fill_sites(tess, r);
    fill_distances(tess, r);
    return r;
}

SeriesReport area_series(const Tessellation& tess) {
    SeriesReport r;
    fill_sites(tess, r);
    fill_areas(tess, r);
    return r;
}

SeriesReport full_series(const Tessellation& tess) {
    SeriesReport r;
    fill_sites(tess, r);
    fill_areas(tess, r);
    fill_distances(tess, r);
    return r;
}

}  // namespace phyllo

namespace phyllo {

long topological_charge(const Tessellation& tess) {
    long q = 0;
    for (const auto& c : tess.cells) q += 6 - c.sides;
    return q;
}

namespace {

std::string fixed(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::vector<InvariantCheck> check_invariants(const Tessellation& tess, const std::vector<GrainBoundary>& boundaries,
                                             const SeriesReport& series) {
    std::vector<InvariantCheck> out;

    {
        InvariantCheck c{"fibonacci_boundaries", true, ""};
        long bad = 0;
        for (const auto& g : boundaries)
            if (g.anomalous) ++bad;
        c.passed = bad == 0;
        c.detail = std::to_string(boundaries.size()) + " rings, " + std::to_string(bad) + " with non-Fibonacci counts";
        out.push_back(c);
    }

    if (on_sphere(tess)) {
        const long q = topological_charge(tess);
        out.push_back({"topological_charge", q == 12, "sum of (6 - sides) = " + std::to_string(q)});
    } else {
        InvariantCheck c{"ring_charge", true, ""};
        long complete = 0;
        for (const auto& g : boundaries) {
            if (!g.complete) continue;
            ++complete;
            if (g.pentagons != g.heptagons) c.passed = false;
        }
        c.detail = std::to_string(complete) + " complete rings with pentagons = heptagons";
        out.push_back(c);
    }

    {
        const auto checks = verify_inflation(boundaries);
        long held = 0;
        for (const auto& ic : checks) held += ic.holds ? 1 : 0;
        out.push_back({"inflation", held == static_cast<long>(checks.size()),
                       std::to_string(held) + "/" + std::to_string(checks.size()) + " consecutive pairs"});
    }

    const auto& sum = series.summary;
    if (sum.distance_count > 0) {
        const bool ok = sum.min_distance >= confinement_low * 0.99 && sum.max_distance <= confinement_high * 1.01;
        out.push_back({"distance_band", ok,
                       "range [" + fixed(sum.min_distance) + ", " + fixed(sum.max_distance) + "] over " +
                           std::to_string(sum.distance_count) + " links"});
    }
    if (sum.analytic_count > 0) {
        out.push_back({"analytic_distance", sum.max_relative_error <= 0.02,
                       "max relative error " + fixed(sum.max_relative_error, 5) + " over " +
                           std::to_string(sum.analytic_count) + " links"});
    }

    {
        InvariantCheck c{"dipole_angles", true, ""};
        long rings = 0;
        double worst = 0;
        for (Hemisphere h : {Hemisphere::origin, Hemisphere::antipode}) {
            int prev_orientation = 0;
            for (const auto& g : boundaries) {
                if (g.hemisphere != h || !g.complete) continue;
                const DipoleAngles a = dipole_angles(g, tess);
                ++rings;
                worst = std::max(worst, std::fabs(a.mean_abs - a.predicted));
                if (std::fabs(a.mean_abs - a.predicted) > 0.05) c.passed = false;
                if (prev_orientation != 0 && a.orientation != -prev_orientation) c.passed = false;
                prev_orientation = a.orientation;
            }
        }
        c.detail = std::to_string(rings) + " complete rings, worst angle gap " + fixed(worst) + " rad";
        out.push_back(c);
    }
    return out;
}

}  // namespace phyllo
