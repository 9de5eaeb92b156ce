#include "phyllo/generator.hpp"

#include <numbers>
#include <stdexcept>

namespace phyllo {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_common(long n, double lambda) {
    if (n < 1) throw std::invalid_argument("generate: n must be at least 1");
    if (!(lambda > 0 && lambda < 1)) throw std::invalid_argument("generate: lambda must lie in (0, 1)");
}

double index_value(long s, Indexing indexing) {
    return indexing == Indexing::half_integer ? static_cast<double>(s) + 0.5 : static_cast<double>(s);
}

}  // namespace

PhylloPattern generate_plane(long n, double a, double lambda, Indexing indexing) {
    check_common(n, lambda);
    if (!(a > 0)) throw std::invalid_argument("generate_plane: a must be positive");
    PhylloPattern p;
    p.surface = {SurfaceKind::plane, std::numeric_limits<double>::quiet_NaN(), a, lambda};
    p.n = n;
    p.indexing = indexing;
    p.sites.resize(static_cast<std::size_t>(n));
    for (long s = 0; s < n; ++s) {
        const double t = index_value(s, indexing);
        Site& site = p.sites[static_cast<std::size_t>(s)];
        site.s = s;
        site.intrinsic.rho = a * std::sqrt(t);
        site.intrinsic.theta = two_pi * lambda * t;
        site.chart = {site.intrinsic.rho, site.intrinsic.theta};
        site.xy = site.chart.xy();
    }
    return p;
}

PhylloPattern generate_hyperbolic(long n, double a, double lambda, Indexing indexing) {
    check_common(n, lambda);
    if (!(a > 0 && a <= 1)) throw std::invalid_argument("generate_hyperbolic: a must lie in (0, 1]");
    PhylloPattern p;
    p.surface = {SurfaceKind::hyperbolic, 1.0 / a, a, lambda};
    p.n = n;
    p.indexing = indexing;
    p.sites.resize(static_cast<std::size_t>(n));
    for (long s = 0; s < n; ++s) {
        const double t = index_value(s, indexing);
        const double x = 0.5 * a * a * t;   // cosh(rho/R) - 1
        Site& site = p.sites[static_cast<std::size_t>(s)];
        site.s = s;
        site.intrinsic.rho = p.surface.R * std::log1p(x + std::sqrt(x * (x + 2.0)));
        site.intrinsic.theta = two_pi * lambda * t;
        // tanh(acosh(1 + x) / 2) = sqrt(x / (x + 2))
        site.chart = {std::sqrt(x / (x + 2.0)), site.intrinsic.theta};
        site.xy = site.chart.xy();
    }
    return p;
}

double stereographic_radius(long nu, double s) {
    if (nu < 1) throw std::invalid_argument("stereographic_radius: nu must be positive");
    if (s < 0 || s >= 2.0 * static_cast<double>(nu))
        throw std::domain_error("stereographic_radius: site at or beyond the projection pole");
    // tan(acos(1 - s/nu) / 2)
    return std::sqrt(s / (2.0 * static_cast<double>(nu) - s));
}

PhylloPattern generate_sphere(long n, double lambda) {
    check_common(n, lambda);
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("generate_sphere: n must be odd and at least 3");
    const long nu = (n - 1) / 2;
    PhylloPattern p;
    const double R = std::sqrt(static_cast<double>(n)) / 2.0;
    p.surface = {SurfaceKind::sphere, R, 1.0 / R, lambda};
    p.n = n;
    p.sites.resize(static_cast<std::size_t>(n));
    const double dnu = static_cast<double>(nu);
    for (long s = 0; s < n; ++s) {
        const long sp = s - nu;
        Site& site = p.sites[static_cast<std::size_t>(s)];
        site.s = s;
        const double sin_lat = static_cast<double>(sp) / dnu;
        const double cos_lat = std::sqrt(static_cast<double>((nu - sp) * (nu + sp))) / dnu;
        const double lat = std::atan2(sin_lat, cos_lat);
        const double theta = two_pi * lambda * static_cast<double>(s);
        site.intrinsic.phi = lat;
        site.intrinsic.theta = theta;
        site.intrinsic.rho = R * (lat + std::numbers::pi / 2);
        site.chart.theta = theta;
        site.chart.r = s == 2 * nu ? std::numeric_limits<double>::infinity() : stereographic_radius(nu, s);
        site.xy = s == 2 * nu ? Vec2{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()}
                              : site.chart.xy();
        site.xyz = {R * cos_lat * std::cos(theta), R * cos_lat * std::sin(theta), R * sin_lat};
    }
    return p;
}

std::vector<double> stereographic_chart(const PhylloPattern& pattern) {
    if (pattern.surface.kind != SurfaceKind::sphere)
        throw std::invalid_argument("stereographic_chart: pattern is not spherical");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(pattern.n - 1));
    for (long s = 0; s + 1 < pattern.n; ++s) out.push_back(stereographic_radius(pattern.nu(), static_cast<double>(s)));
    return out;
}

PhylloPattern generate(SurfaceKind kind, long n, double a, double lambda) {
    switch (kind) {
        case SurfaceKind::plane: return generate_plane(n, a, lambda);
        case SurfaceKind::hyperbolic: return generate_hyperbolic(n, a, lambda);
        case SurfaceKind::sphere: return generate_sphere(n, lambda);
    }
    throw std::invalid_argument("generate: unknown geometry");
}

}  // namespace phyllo
