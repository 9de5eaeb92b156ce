#pragma once

#include <vector>

#include "phyllo/geometry.hpp"
#include "phyllo/numerics.hpp"

namespace phyllo {

enum class Indexing { integer, half_integer };

struct Site {
    long s = 0;
    IntrinsicPoint intrinsic;
    ChartPoint chart;
    Vec2 xy;                 // chart position in Cartesian form
    Vec3 xyz;                // sphere only
};

struct PhylloPattern {
    SurfaceSpec surface;
    long n = 0;
    Indexing indexing = Indexing::integer;
    std::vector<Site> sites;

    // n = 2 nu + 1 on the sphere
    long nu() const { return (n - 1) / 2; }
    // Length unit in which the mean cell area is pi: a on the plane, 1 on
    // the curved surfaces whose R already carries that normalization.
    double length_scale() const { return surface.kind == SurfaceKind::plane ? surface.a : 1.0; }
};

PhylloPattern generate_plane(long n, double a = 1.0, double lambda = golden_divergence(),
                             Indexing indexing = Indexing::integer);

// Curvature radius R = 1/a so that the mean cell area is pi.
PhylloPattern generate_hyperbolic(long n, double a, double lambda = golden_divergence(),
                                  Indexing indexing = Indexing::integer);

// n odd; R = sqrt(n)/2.
PhylloPattern generate_sphere(long n, double lambda = golden_divergence());

// Stereographic chart radius of sphere site s, projected from the pole of
// site 2 nu; diverges there.
double stereographic_radius(long nu, double s);

// Chart radii of sites 0 .. n-2 (the projection pole itself is omitted).
std::vector<double> stereographic_chart(const PhylloPattern& pattern);

PhylloPattern generate(SurfaceKind kind, long n, double a, double lambda);

}  // namespace phyllo
