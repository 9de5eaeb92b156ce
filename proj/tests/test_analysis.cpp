#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "phyllo/analysis.hpp"

using namespace phyllo;

namespace {

struct Analyzed {
    Tessellation tess;
    std::vector<GrainBoundary> rings;
};

const Analyzed& plane3000() {
    static const Analyzed r = [] {
        Analyzed x{tessellate(generate_plane(3000)), {}};
        x.rings = detect_grain_boundaries(x.tess);
        return x;
    }();
    return r;
}

const Analyzed& sphere9301() {
    static const Analyzed r = [] {
        Analyzed x{tessellate(generate_sphere(9301)), {}};
        x.rings = detect_grain_boundaries(x.tess);
        return x;
    }();
    return r;
}

std::vector<const GrainBoundary*> complete(const std::vector<GrainBoundary>& rings, Hemisphere h) {
    std::vector<const GrainBoundary*> out;
    for (const auto& g : rings)
        if (g.complete && g.hemisphere == h) out.push_back(&g);
    return out;
}

}  // namespace

TEST(GrainBoundaries, PlaneCompositions) {
    const auto& rings = plane3000().rings;
    ASSERT_GE(rings.size(), 4u);
    EXPECT_EQ(rings[0].heptagons, 3);
    EXPECT_EQ(rings[0].hexagons, 5);
    EXPECT_EQ(rings[0].pentagons, 8);
    EXPECT_FALSE(rings[0].complete);
    EXPECT_FALSE(rings[0].anomalous);
    EXPECT_EQ(rings[0].s_first, 15);
    EXPECT_EQ(rings[0].s_last, 30);
    const long expect[][3] = {{13, 8, 13}, {21, 13, 21}, {34, 21, 34}};
    for (int k = 0; k < 3; ++k) {
        const auto& g = rings[k + 1];
        EXPECT_TRUE(g.complete);
        EXPECT_EQ(g.heptagons, expect[k][0]);
        EXPECT_EQ(g.hexagons, expect[k][1]);
        EXPECT_EQ(g.pentagons, expect[k][2]);
        EXPECT_EQ(g.rank, 7 + k);
    }
}

TEST(GrainBoundaries, CompleteRingsHaveFibonacciCounts) {
    for (const Analyzed* run : {&plane3000(), &sphere9301()})
        for (const auto& g : run->rings) {
            if (!g.complete) continue;
            EXPECT_EQ(g.heptagons, fibonacci(g.rank));
            EXPECT_EQ(g.hexagons, fibonacci(g.rank - 1));
            EXPECT_EQ(g.pentagons, fibonacci(g.rank));
            EXPECT_EQ(g.others, 0);
            EXPECT_EQ(static_cast<std::int64_t>(g.dipoles.size()), fibonacci(g.rank));
            // heptagon and pentagon of each dipole share an edge
            for (const auto& d : g.dipoles) {
                const auto& ring = run->tess.cells[d.heptagon].ring;
                EXPECT_NE(std::find(ring.begin(), ring.end(), d.pentagon), ring.end());
            }
        }
}

TEST(GrainBoundaries, RankTenWordMatchesStrip) {
    const GrainBoundary* g = nullptr;
    for (const auto& r : plane3000().rings)
        if (r.rank == 10) g = &r;
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(g->dipoles.size(), 55u);
    // one letter per ring hexagon: L when two dipoles follow it, S when one does
    EXPECT_EQ(static_cast<std::int64_t>(g->word.symbols.size()), fibonacci(9));
    EXPECT_EQ(static_cast<std::int64_t>(g->word.count('L')), fibonacci(8));
    EXPECT_EQ(static_cast<std::int64_t>(g->word.count('S')), fibonacci(7));
    EXPECT_TRUE(equivalent_words(g->word, strip_sequence(10).word));
}

TEST(GrainBoundaries, NonFibonacciRingIsFlagged) {
    // a divergence slightly off golden grows rings of 18 and 41 dipoles
    const Tessellation odd = tessellate(generate_plane(3000, 1.0, 0.39));
    long anomalous = 0;
    for (const auto& g : detect_grain_boundaries(odd)) anomalous += g.anomalous;
    EXPECT_GE(anomalous, 2);
    for (const auto& g : plane3000().rings) EXPECT_FALSE(g.anomalous);
}

TEST(GrainBoundaries, RingCutByTheRimIsTruncated) {
    // at n = 2531 the pentagons of the rank 11 ring fall among the boundary cells
    const auto rings = detect_grain_boundaries(tessellate(generate_plane(2531)));
    ASSERT_FALSE(rings.empty());
    const auto& last = rings.back();
    EXPECT_TRUE(last.truncated);
    EXPECT_FALSE(last.anomalous);
    EXPECT_FALSE(last.complete);
    EXPECT_EQ(last.heptagons, 89);
    EXPECT_EQ(last.rank, 11);
    for (const auto& g : plane3000().rings) EXPECT_FALSE(g.truncated);
}

TEST(Inflation, PlaneAndSphere) {
    for (const Analyzed* run : {&plane3000(), &sphere9301()}) {
        const auto checks = verify_inflation(run->rings);
        EXPECT_GE(checks.size(), 3u);
        for (const auto& c : checks) {
            EXPECT_TRUE(c.holds) << c.from_rank << "->" << c.to_rank;
            EXPECT_EQ(c.to_rank, c.from_rank + 1);
        }
    }
}

TEST(Inflation, RingIsNotItsOwnInflation) {
    for (const auto* g : complete(plane3000().rings, Hemisphere::origin))
        EXPECT_FALSE(equivalent_words(inflate(g->word), g->word));
}

TEST(DipoleAngles, MatchPredictionAndAlternate) {
    for (const Analyzed* run : {&plane3000(), &sphere9301()})
        for (Hemisphere h : {Hemisphere::origin, Hemisphere::antipode}) {
            int prev = 0;
            for (const auto* g : complete(run->rings, h)) {
                const DipoleAngles a = dipole_angles(*g, run->tess);
                EXPECT_NEAR(a.predicted, std::atan2(double(fibonacci(g->rank - 1)), double(fibonacci(g->rank))), 1e-15);
                EXPECT_NEAR(a.mean_abs, a.predicted, 0.05) << "rank " << g->rank;
                if (prev != 0) EXPECT_EQ(a.orientation, -prev);
                prev = a.orientation;
            }
        }
}

TEST(DipoleAngles, RankNineAndLimit) {
    for (const auto& g : plane3000().rings)
        if (g.rank == 9) EXPECT_NEAR(dipole_angles(g, plane3000().tess).mean_abs, 0.5536, 0.05);
    EXPECT_NEAR(std::atan(1.0 / golden_ratio()), 0.55357, 1e-5);
}

TEST(Perimeter, PredictionAndMeasurement) {
    EXPECT_NEAR(boundary_perimeter_prediction(6), std::sqrt(233 * std::numbers::pi), 1e-12);
    EXPECT_NEAR(boundary_perimeter_prediction(6), 27.055, 1e-3);
    for (const auto* g : complete(plane3000().rings, Hemisphere::origin)) {
        const double ratio = g->perimeter / boundary_perimeter_prediction(g->rank);
        EXPECT_GE(ratio, 0.97) << g->rank;
        EXPECT_LE(ratio, 1.03) << g->rank;
    }
}

TEST(BoundaryRadius, PerSurface) {
    const SurfaceSpec plane{SurfaceKind::plane, NAN, 1.0, golden_divergence()};
    for (int u = 2; u < 20; ++u)
        EXPECT_NEAR(boundary_radius(plane, u), std::sqrt(double(fibonacci(2 * u + 1)) / std::numbers::pi) / 2, 1e-12);
    EXPECT_NEAR(boundary_radius(plane, 11) / boundary_radius(plane, 10), 1.618, 1e-3);
    const SurfaceSpec disc{SurfaceKind::hyperbolic, 40.0, 1.0 / 40, golden_divergence()};
    // widths approach R ln(tau) only once the ring is much longer than R
    const double w = boundary_radius(disc, 31) - boundary_radius(disc, 30);
    EXPECT_NEAR(w / 40.0, std::log(golden_ratio()), 1e-3);
    const SurfaceSpec ball{SurfaceKind::sphere, 5.0, 0.2, golden_divergence()};
    EXPECT_THROW(boundary_radius(ball, 12), std::domain_error);
}

TEST(Thresholds, ReproduceTheKnownList) {
    const std::vector<long> expect{1, 2, 4, 11, 28, 74, 194, 508, 1331, 3484, 9122, 23881};
    EXPECT_EQ(sphere_thresholds(12), expect);
    EXPECT_THROW(sphere_thresholds(41), std::out_of_range);
    // each entry is the nearest integer to f_{2u+1} / pi
    const auto list = sphere_thresholds(30);
    for (int u = 1; u <= 30; ++u)
        EXPECT_LE(std::fabs(list[u - 1] - double(oracle::fib(2 * u + 1)) / std::numbers::pi), 0.5);
}

TEST(PolarAngle, Examples) {
    // equator exactly when f_{2u+1} = n pi; the closest case available
    EXPECT_NEAR(boundary_polar_angle(9, 665), std::asin(std::sqrt(4181.0 / (1331 * std::numbers::pi))), 1e-15);
    EXPECT_GT(boundary_polar_angle(9, 675), 1.3);
    EXPECT_THROW(boundary_polar_angle(10, 675), std::domain_error);
    // the previous ring at the birth of the next one
    const long nu = (sphere_thresholds(15).back() - 1) / 2;
    EXPECT_NEAR(boundary_polar_angle(14, nu), std::asin(1 / golden_ratio()), 2e-3);
    EXPECT_NEAR(std::asin(1 / golden_ratio()), 0.666, 1e-3);
}

TEST(GrainBounds, EstimateAgreesWithDetection) {
    const auto& run = sphere9301();
    const long nu = run.tess.pattern.nu();
    for (const auto& g : run.rings) {
        if (!g.complete) continue;
        const auto [lo, hi] = grain_bounds_estimate(g.rank, nu);
        EXPECT_EQ(hi - lo, fibonacci(g.rank - 1) - 1);
        EXPECT_LE(std::labs(g.hex_first - lo), 1) << g.rank;
        EXPECT_LE(std::labs(g.hex_last - hi), 1) << g.rank;
    }
}

TEST(EquatorialDefects, Threshold1331) {
    EXPECT_EQ(equatorial_defects(tessellate(generate_sphere(1329))), 0);
    EXPECT_GT(equatorial_defects(tessellate(generate_sphere(1333))), 0);
    EXPECT_THROW(equatorial_defects(plane3000().tess), std::invalid_argument);
}

TEST(AnalyticDistance, AgreesWithIntrinsicOracle) {
    const double lambda = golden_divergence();
    for (int u = 5; u <= 11; ++u) {
        const double f = double(fibonacci(u));
        const double gamma = 2 * std::numbers::pi * (lambda * f - double(fibonacci(u - 1)));
        const SurfaceSpec plane{SurfaceKind::plane, NAN, 1.0, lambda};
        const SurfaceSpec disc{SurfaceKind::hyperbolic, 40.0, 1.0 / 40, lambda};
        const long n = 9301;
        const SurfaceSpec ball{SurfaceKind::sphere, std::sqrt(double(n)) / 2, 2 / std::sqrt(double(n)), lambda};
        for (double s = 4 * f; s < 4000; s += 37) {
            EXPECT_NEAR(analytic_distance(plane, s, u), oracle::intrinsic_step(SurfaceKind::plane, s, f, gamma), 1e-9);
            EXPECT_NEAR(analytic_distance(disc, s, u),
                        oracle::intrinsic_step(SurfaceKind::hyperbolic, s, f, gamma, 1.0 / 40), 1e-9);
            EXPECT_NEAR(analytic_distance(ball, s, u, n),
                        oracle::intrinsic_step(SurfaceKind::sphere, s, f, gamma, 0, n), 1e-9);
        }
    }
    const SurfaceSpec plane{SurfaceKind::plane, NAN, 1.0, lambda};
    EXPECT_THROW(analytic_distance(plane, 0.0, 5), std::domain_error);
    EXPECT_THROW(analytic_distance(plane, 10.0, 0), std::out_of_range);
}

TEST(AnalyticDistance, MinimaConverge) {
    const double limit = std::sqrt(2 * std::numbers::pi / std::sqrt(5.0));
    EXPECT_NEAR(limit, 1.676, 1e-3);
    for (int u = 8; u <= 30; ++u) EXPECT_NEAR(minimal_distance(u) / limit, 1.0, 0.01) << u;
    // the closed-form minimum matches a scan of the planar formula
    const SurfaceSpec plane{SurfaceKind::plane, NAN, 1.0, golden_divergence()};
    for (int u = 6; u <= 12; ++u) {
        double best = INFINITY;
        for (double s = 1; s < 1e6; s *= 1.001) best = std::min(best, analytic_distance(plane, s, u));
        EXPECT_NEAR(best, minimal_distance(u), 1e-5 * best);
    }
}

TEST(AnalyticDistance, SquareCellLimits) {
    EXPECT_NEAR(std::sqrt(std::numbers::pi), 1.772, 1e-3);
    EXPECT_NEAR(std::sqrt(2 * std::numbers::pi), 2.506, 1e-3);
}

TEST(Series, PlaneRankElevenAgainstMeasurement) {
    const SeriesReport r = distance_series(plane3000().tess);
    long seen = 0;
    for (const auto& site : r.sites) {
        if (site.s < 100 || site.s > 2254) continue;
        for (const auto& l : site.links) {
            if (l.rank != 11 || std::isnan(l.analytic)) continue;
            ++seen;
            EXPECT_LT(std::fabs(l.analytic / l.distance - 1), 0.02) << site.s;
        }
    }
    EXPECT_GT(seen, 500);
}

TEST(Series, ConfinementAndAreas) {
    const SeriesReport r = full_series(plane3000().tess);
    EXPECT_GE(r.summary.min_distance, confinement_low * 0.99);
    EXPECT_LE(r.summary.max_distance, confinement_high * 1.01);
    EXPECT_NEAR(r.summary.stddev_area, 0.02246, 0.15 * 0.02246);
    EXPECT_NEAR(r.summary.mean_area, std::numbers::pi, 0.01);
    const SeriesReport s = area_series(sphere9301().tess);
    EXPECT_NEAR(s.summary.mean_area, std::numbers::pi, 1e-9);
}

TEST(Series, SphereHemispheresUseOppositeSigns) {
    const SeriesReport r = distance_series(sphere9301().tess);
    const long nu = sphere9301().tess.pattern.nu();
    for (const auto& site : r.sites)
        for (const auto& l : site.links) {
            if (site.s <= nu)
                EXPECT_GT(l.delta_s, 0);
            else
                EXPECT_LT(l.delta_s, 0);
        }
}

TEST(Invariants, AllPassOnGoldenPatterns) {
    for (const Analyzed* run : {&plane3000(), &sphere9301()}) {
        const auto checks = check_invariants(run->tess, run->rings, full_series(run->tess));
        for (const auto& c : checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    }
    EXPECT_EQ(topological_charge(sphere9301().tess), 12);
}
