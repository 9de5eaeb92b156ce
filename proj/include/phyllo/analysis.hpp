#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phyllo/tessellation.hpp"

namespace phyllo {

// Which pole a spherical ring is counted from: the one holding site 0 or the
// one holding site n-1. Plane and disc rings all use `origin`.
enum class Hemisphere { origin, antipode };
const char* hemisphere_name(Hemisphere h);

struct Dipole {
    long heptagon = 0;
    long pentagon = 0;
    double angle = 0;     // signed angle from the outward radial direction, radians
    double azimuth = 0;   // of the midpoint
};

struct GrainBoundary {
    int rank = 0;                // u such that the ring holds f_u dipoles when complete
    bool complete = false;       // counts == (f_u, f_{u-1}, f_u) and nothing else
    bool anomalous = false;      // pentagon count not within 1 of a Fibonacci number
    bool truncated = false;      // reaches the boundary cells at the rim; never complete or anomalous
    Hemisphere hemisphere = Hemisphere::origin;
    std::vector<long> members;   // by azimuth
    long heptagons = 0;
    long hexagons = 0;
    long pentagons = 0;
    long others = 0;             // squares and cells with 8+ sides
    std::vector<Dipole> dipoles; // by azimuth
    LSWord word;
    long s_first = 0;            // index range of the members, counted from the ring's pole
    long s_last = 0;
    long hex_first = -1;         // index range of the ring hexagons, same counting
    long hex_last = -1;
    double mean_radius = 0;      // geodesic, mean cell area pi
    double perimeter = 0;        // circumference of the geodesic circle of radius mean_radius
};

std::vector<GrainBoundary> detect_grain_boundaries(const Tessellation& tess);

struct InflationCheck {
    int from_rank = 0;
    int to_rank = 0;
    Hemisphere hemisphere = Hemisphere::origin;
    bool holds = false;
};

// Compares each complete ring with the next complete ring of the same pole.
std::vector<InflationCheck> verify_inflation(const std::vector<GrainBoundary>& boundaries);

struct DipoleAngles {
    std::vector<double> angles;   // signed, one per dipole
    double mean_abs = 0;
    double predicted = 0;         // arccot(f_u / f_{u-1})
    int orientation = 0;          // sign of the mean signed angle
};

DipoleAngles dipole_angles(const GrainBoundary& boundary, const Tessellation& tess);

double boundary_perimeter_prediction(int u);
double boundary_radius(const SurfaceSpec& surface, int u);

// Sphere sizes at which ring u appears: round(f_{2u+1} / pi) for u = 1 .. u_max.
std::vector<long> sphere_thresholds(int u_max);
double boundary_polar_angle(int u, long nu);
std::pair<long, long> grain_bounds_estimate(int u, long nu);

// Non-hexagonal cells within the equatorial belt |latitude| <= (pi/2 - asin(1/tau)) / 2,
// where a newborn ring shows up before the previous ones have moved away.
long equatorial_defects(const Tessellation& tess);

// First-order neighbor distance for rank u at pole-relative index s, in units
// where the mean cell area is pi. Sphere patterns need n to place the poles.
double analytic_distance(const SurfaceSpec& surface, double s, int u, long n = 0);
// Mean of the evaluations at both ends of the link s -> s + f_u.
double averaged_analytic_distance(const SurfaceSpec& surface, double s, int u, long n = 0);
// Closed-form minimum over s of the planar d_u(s).
double minimal_distance(int u);

struct LinkSample {
    long to = 0;
    long delta_s = 0;
    int rank = 0;
    double distance = 0;
    double analytic = std::numeric_limits<double>::quiet_NaN();   // NaN outside the validity domain
};

struct SiteSample {
    long s = 0;
    int sides = 0;
    bool boundary = false;
    bool core = false;
    double area = std::numeric_limits<double>::quiet_NaN();
    std::vector<LinkSample> links;   // outward links only
};

struct SeriesSummary {
    long area_count = 0;
    double mean_area = 0;
    double stddev_area = 0;
    long distance_count = 0;
    double min_distance = 0;
    double max_distance = 0;
    long analytic_count = 0;
    double max_relative_error = 0;
};

struct SeriesReport {
    SurfaceKind geometry = SurfaceKind::plane;
    std::vector<SiteSample> sites;
    SeriesSummary summary;
};

// Links are compared with the analytic form only once s >= this many times f_u.
inline constexpr double analytic_domain_factor = 4.0;

SeriesReport distance_series(const Tessellation& tess);
SeriesReport area_series(const Tessellation& tess);
// Both series in one report.
SeriesReport full_series(const Tessellation& tess);

// Neighbor distances of a golden pattern stay inside this band (mean cell area pi).
inline constexpr double confinement_low = 1.67;
inline constexpr double confinement_high = 2.51;

// Sum of (6 - sides) over every cell; 12 on any sphere.
long topological_charge(const Tessellation& tess);

struct InvariantCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// The checks `phyllo analyze` reports: Fibonacci ring counts, charge,
// inflation between complete rings, distance band, analytic distances and
// dipole angles.
std::vector<InvariantCheck> check_invariants(const Tessellation& tess, const std::vector<GrainBoundary>& boundaries,
                                             const SeriesReport& series);

}  // namespace phyllo
