#include "phyllo/geometry.hpp"

#include <numbers>
#include <stdexcept>

namespace phyllo {

const char* surface_name(SurfaceKind kind) {
    switch (kind) {
        case SurfaceKind::plane: return "plane";
        case SurfaceKind::sphere: return "sphere";
        case SurfaceKind::hyperbolic: return "hyperbolic";
    }
    return "plane";
}

SurfaceKind parse_surface(const std::string& name) {
    if (name == "plane") return SurfaceKind::plane;
    if (name == "sphere") return SurfaceKind::sphere;
    if (name == "hyperbolic") return SurfaceKind::hyperbolic;
    throw std::invalid_argument("unknown geometry '" + name + "' (expected plane, sphere or hyperbolic)");
}

double SurfaceSpec::curvature() const {
    switch (kind) {
        case SurfaceKind::plane: return 0.0;
        case SurfaceKind::sphere: return 1.0 / (R * R);
        case SurfaceKind::hyperbolic: return -1.0 / (R * R);
    }
    return 0.0;
}

void SurfaceSpec::validate() const {
    if (kind != SurfaceKind::plane && !(R > 0))
        throw std::invalid_argument("surface: R must be positive on curved surfaces");
    if (!(a > 0)) throw std::invalid_argument("surface: a must be positive");
    if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("surface: lambda must lie in (0, 1)");
}

double conformal_factor(const SurfaceSpec& surface, double r) {
    switch (surface.kind) {
        case SurfaceKind::plane: return 1.0;
        case SurfaceKind::hyperbolic:
            if (!(r >= 0 && r < 1)) throw std::domain_error("conformal_factor: r outside the Poincare disc");
            return 2.0 * surface.R / (1.0 - r * r);
        case SurfaceKind::sphere:
            if (!(r >= 0) || std::isinf(r)) throw std::domain_error("conformal_factor: invalid stereographic radius");
            return 2.0 * surface.R / (1.0 + r * r);
    }
    return 1.0;
}

Vec3 chart_to_sphere(double R, Vec2 p) {
    const double r2 = dot(p, p);
    const double k = R / (1.0 + r2);
    return {2.0 * p.x * k, 2.0 * p.y * k, (r2 - 1.0) * k};
}

Vec2 sphere_to_chart(double R, Vec3 p) {
    const double denom = R - p.z;
    if (!(denom > 0)) throw std::domain_error("sphere_to_chart: point at the projection pole");
    return {p.x / denom, p.y / denom};
}

double great_circle_distance(double R, Vec3 p, Vec3 q) {
    return R * std::atan2(norm(cross(p, q)), dot(p, q));
}

double chart_distance(const SurfaceSpec& surface, Vec2 p, Vec2 q) {
    switch (surface.kind) {
        case SurfaceKind::plane: return norm(q - p);
        case SurfaceKind::hyperbolic: {
            const double dp = 1.0 - dot(p, p);
            const double dq = 1.0 - dot(q, q);
            if (!(dp > 0 && dq > 0)) throw std::domain_error("chart_distance: point outside the Poincare disc");
            const Vec2 d = q - p;
            // acosh(1 + 2x) written as 2 asinh(sqrt(x)) to keep short distances accurate
            return 2.0 * surface.R * std::asinh(std::sqrt(dot(d, d) / (dp * dq)));
        }
        case SurfaceKind::sphere:
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(q.x) || !std::isfinite(q.y))
                throw std::domain_error("chart_distance: point at the projection pole");
            return great_circle_distance(surface.R, chart_to_sphere(1.0, p), chart_to_sphere(1.0, q));
    }
    return 0.0;
}

double chart_distance(const SurfaceSpec& surface, const ChartPoint& p, const ChartPoint& q) {
    if (surface.kind == SurfaceKind::sphere && (std::isinf(p.r) || std::isinf(q.r))) {
        // one of the points is the projection pole itself
        if (std::isinf(p.r) && std::isinf(q.r)) return 0.0;
        const double r = std::isinf(p.r) ? q.r : p.r;
        return surface.R * (std::numbers::pi - 2.0 * std::atan(r));
    }
    return chart_distance(surface, p.xy(), q.xy());
}

double radius_to_geodesic(const SurfaceSpec& surface, double r) {
    switch (surface.kind) {
        case SurfaceKind::plane: return r;
        case SurfaceKind::hyperbolic:
            if (!(r >= 0 && r < 1)) throw std::domain_error("radius_to_geodesic: r outside the Poincare disc");
            return 2.0 * surface.R * std::atanh(r);
        case SurfaceKind::sphere:
            if (std::isinf(r)) return surface.R * std::numbers::pi;
            return 2.0 * surface.R * std::atan(r);
    }
    return r;
}

double geodesic_to_radius(const SurfaceSpec& surface, double rho) {
    switch (surface.kind) {
        case SurfaceKind::plane: return rho;
        case SurfaceKind::hyperbolic: return std::tanh(rho / (2.0 * surface.R));
        case SurfaceKind::sphere:
            if (rho >= surface.R * std::numbers::pi) return std::numeric_limits<double>::infinity();
            return std::tan(rho / (2.0 * surface.R));
    }
    return rho;
}

ChartPoint to_chart(const SurfaceSpec& surface, const IntrinsicPoint& p) {
    return {geodesic_to_radius(surface, p.rho), p.theta};
}

IntrinsicPoint to_intrinsic(const SurfaceSpec& surface, const ChartPoint& p) {
    IntrinsicPoint out;
    out.rho = radius_to_geodesic(surface, p.r);
    out.theta = p.theta;
    if (surface.kind == SurfaceKind::sphere) out.phi = out.rho / surface.R - std::numbers::pi / 2;
    return out;
}

double circumference_radius(const SurfaceSpec& surface, double rho) {
    switch (surface.kind) {
        case SurfaceKind::plane: return rho;
        case SurfaceKind::hyperbolic: return surface.R * std::sinh(rho / surface.R);
        case SurfaceKind::sphere: return surface.R * std::sin(rho / surface.R);
    }
    return rho;
}

double hyperbolic_circle_area(const SurfaceSpec& surface, double rho) {
    if (surface.kind != SurfaceKind::hyperbolic)
        throw std::invalid_argument("hyperbolic_circle_area: surface is not hyperbolic");
    if (rho < 0) throw std::domain_error("hyperbolic_circle_area: negative radius");
    const double R = surface.R;
    // cosh(x) - 1 = 2 sinh^2(x/2), exact for small radii
    const double h = std::sinh(rho / (2.0 * R));
    return 4.0 * std::numbers::pi * R * R * h * h;
}

double sphere_cap_sites(double nu, double colatitude) {
    return nu * (1.0 - std::cos(colatitude));
}

namespace {

// 16-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr double gl_nodes[8] = {0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
                                0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
                                0.9445750230732326, 0.9894009349916499};
constexpr double gl_weights[8] = {0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
                                  0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
                                  0.0622535239386479, 0.0271524594117541};

// Integral over t in [0,1] of 1 / (1 + sign |A + t (B - A)|^2).
double edge_weight(Vec2 A, Vec2 B, double sign) {
    const Vec2 d = B - A;
    double sum = 0;
    for (int k = 0; k < 8; ++k) {
        for (double side : {-1.0, 1.0}) {
            const double t = 0.5 * (1.0 + side * gl_nodes[k]);
            const Vec2 p = A + t * d;
            sum += gl_weights[k] / (1.0 + sign * dot(p, p));
        }
    }
    return 0.5 * sum;
}

}  // namespace

double chart_polygon_area(const SurfaceSpec& surface, std::span<const Vec2> polygon) {
    const std::size_t m = polygon.size();
    if (m < 3) return 0.0;
    double acc = 0;
    if (surface.kind == SurfaceKind::plane) {
        for (std::size_t i = 0; i < m; ++i) acc += cross(polygon[i], polygon[(i + 1) % m]);
        return 0.5 * acc;
    }
    // Green's theorem with the 1-form 2 (x dy - y dx) / (1 -+ r^2), whose
    // exterior derivative is the metric area density 4 / (1 -+ r^2)^2.
    const double sign = surface.kind == SurfaceKind::hyperbolic ? -1.0 : 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 A = polygon[i];
        const Vec2 B = polygon[(i + 1) % m];
        if (surface.kind == SurfaceKind::hyperbolic && (dot(A, A) >= 1.0 || dot(B, B) >= 1.0))
            throw std::domain_error("chart_polygon_area: vertex outside the Poincare disc");
        acc += 2.0 * cross(A, B) * edge_weight(A, B, sign);
    }
    return surface.R * surface.R * acc;
}

double spherical_polygon_area(double R, Vec3 center, std::span<const Vec3> polygon) {
    const std::size_t m = polygon.size();
    if (m < 3) return 0.0;
    const Vec3 c = normalized(center);
    double excess = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const Vec3 a = normalized(polygon[i]);
        const Vec3 b = normalized(polygon[(i + 1) % m]);
        const double num = dot(c, cross(a, b));
        const double den = 1.0 + dot(c, a) + dot(a, b) + dot(b, c);
        excess += 2.0 * std::atan2(num, den);
    }
    return R * R * excess;
}

}  // namespace phyllo
