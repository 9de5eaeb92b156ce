#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <string>

namespace phyllo {

enum class SurfaceKind { plane, sphere, hyperbolic };

const char* surface_name(SurfaceKind kind);
SurfaceKind parse_surface(const std::string& name);

struct Vec2 {
    double x = 0;
    double y = 0;
};

struct Vec3 {
    double x = 0;
    double y = 0;
    double z = 0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double k, Vec3 a) { return {k * a.x, k * a.y, k * a.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) { return (1.0 / norm(a)) * a; }

// kind, curvature radius R (ignored for the plane), metric scale a and
// divergence lambda. Curvature is +1/R^2 on the sphere and -1/R^2 on the
// hyperbolic plane.
struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::plane;
    double R = std::numeric_limits<double>::quiet_NaN();
    double a = 1.0;
    double lambda = 0.0;

    double curvature() const;
    void validate() const;
};

// Polar chart coordinates. Plane: the plane itself. Hyperbolic: Poincare disc
// of unit radius. Sphere: stereographic plane, projected from the pole
// opposite to the chart origin.
struct ChartPoint {
    double r = 0;
    double theta = 0;
    Vec2 xy() const { return {r * std::cos(theta), r * std::sin(theta)}; }
};

// rho is the geodesic distance from the chart origin; phi is the latitude and
// is only meaningful on the sphere, where the chart origin sits at phi = -pi/2.
struct IntrinsicPoint {
    double rho = 0;
    double theta = 0;
    double phi = std::numeric_limits<double>::quiet_NaN();
};

double conformal_factor(const SurfaceSpec& surface, double r);

double chart_distance(const SurfaceSpec& surface, const ChartPoint& p, const ChartPoint& q);
double chart_distance(const SurfaceSpec& surface, Vec2 p, Vec2 q);

// Geodesic distance from the chart origin to a point at chart radius r, and back.
double radius_to_geodesic(const SurfaceSpec& surface, double r);
double geodesic_to_radius(const SurfaceSpec& surface, double rho);

ChartPoint to_chart(const SurfaceSpec& surface, const IntrinsicPoint& p);
IntrinsicPoint to_intrinsic(const SurfaceSpec& surface, const ChartPoint& p);

// Radius of the Euclidean circle with the same circumference as a geodesic
// circle of radius rho: rho, R sinh(rho/R) or R sin(rho/R).
double circumference_radius(const SurfaceSpec& surface, double rho);

double hyperbolic_circle_area(const SurfaceSpec& surface, double rho);
double sphere_cap_sites(double nu, double colatitude);

// Sphere embedding of the stereographic chart: the chart origin maps to
// (0, 0, -R).
Vec3 chart_to_sphere(double R, Vec2 p);
Vec2 sphere_to_chart(double R, Vec3 p);
double great_circle_distance(double R, Vec3 p, Vec3 q);

// Metric area of a chart polygon with straight chart edges (any orientation
// gives the signed area; counter-clockwise is positive).
double chart_polygon_area(const SurfaceSpec& surface, std::span<const Vec2> polygon);

// Area of a spherical polygon with great-circle edges, vertices counter-clockwise
// seen from outside, on a sphere of radius R. Uses a fan from `center`.
double spherical_polygon_area(double R, Vec3 center, std::span<const Vec3> polygon);

}  // namespace phyllo
