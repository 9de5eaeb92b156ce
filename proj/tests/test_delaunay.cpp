#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "phyllo/delaunay.hpp"
#include "phyllo/generator.hpp"

using namespace phyllo;

namespace {

std::set<std::array<int, 3>> sorted_faces(const std::vector<std::array<int, 3>>& faces) {
    std::set<std::array<int, 3>> out;
    for (auto f : faces) {
        std::sort(f.begin(), f.end());
        out.insert(f);
    }
    return out;
}

void expect_consistent(const Triangulation& t) {
    for (std::size_t f = 0; f < t.faces.size(); ++f)
        for (int i = 0; i < 3; ++i) {
            const int g = t.adjacent[f][i];
            ASSERT_GE(g, 0);
            // g must point back at f
            const auto& adj = t.adjacent[static_cast<std::size_t>(g)];
            EXPECT_TRUE(adj[0] == int(f) || adj[1] == int(f) || adj[2] == int(f));
        }
}

}  // namespace

TEST(Delaunay2d, MatchesBruteForceOnRandomPoints) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Vec2> pts;
        const int n = 8 + trial * 3;
        for (int i = 0; i < n; ++i) pts.push_back({u(rng), u(rng)});
        const Triangulation t = delaunay_2d(pts);
        expect_consistent(t);
        EXPECT_EQ(sorted_faces(t.finite_faces()), sorted_faces(oracle::brute_delaunay(pts))) << "trial " << trial;
    }
}

TEST(Delaunay2d, MatchesBruteForceOnSpiral) {
    const auto p = generate_plane(60);
    std::vector<Vec2> pts;
    for (const auto& s : p.sites) pts.push_back(s.xy);
    const Triangulation t = delaunay_2d(pts);
    EXPECT_EQ(sorted_faces(t.finite_faces()), sorted_faces(oracle::brute_delaunay(pts)));
}

TEST(Delaunay2d, FacesAroundAreCounterClockwise) {
    const auto p = generate_plane(200);
    std::vector<Vec2> pts;
    for (const auto& s : p.sites) pts.push_back(s.xy);
    const Triangulation t = delaunay_2d(pts);
    for (int v = 0; v < 200; ++v) {
        const auto around = t.faces_around(v);
        bool ghost = false;
        for (int f : around) ghost = ghost || t.is_ghost(f);
        if (ghost) continue;
        double turn = 0;
        for (std::size_t k = 0; k < around.size(); ++k) {
            const auto& fa = t.faces[static_cast<std::size_t>(around[k])];
            int i = 0;
            while (fa[i] != v) ++i;
            const Vec2 d = pts[static_cast<std::size_t>(fa[(i + 1) % 3])] - pts[v];
            const auto& fb = t.faces[static_cast<std::size_t>(around[(k + 1) % around.size()])];
            int j = 0;
            while (fb[j] != v) ++j;
            const Vec2 e = pts[static_cast<std::size_t>(fb[(j + 1) % 3])] - pts[v];
            turn += std::atan2(cross(d, e), dot(d, e));
        }
        EXPECT_NEAR(turn, 2 * std::numbers::pi, 1e-9) << v;
    }
}

TEST(Delaunay2d, Errors) {
    const std::vector<Vec2> dup{{0, 0}, {1, 0}, {0, 1}, {1, 0}};
    try {
        delaunay_2d(dup);
        FAIL() << "expected DuplicateSitesError";
    } catch (const DuplicateSitesError& e) {
        EXPECT_EQ(std::min(e.first, e.second), 1);
        EXPECT_EQ(std::max(e.first, e.second), 3);
    }
    const std::vector<Vec2> line{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    EXPECT_THROW(delaunay_2d(line), DegenerateInputError);
    const std::vector<Vec2> two{{0, 0}, {1, 1}};
    EXPECT_THROW(delaunay_2d(two), DegenerateInputError);
}

TEST(Delaunay2d, CocircularGridIsDeterministic) {
    // a square grid is full of cocircular quadruples
    std::vector<Vec2> pts;
    for (int i = 0; i < 12; ++i)
        for (int j = 0; j < 12; ++j) pts.push_back({double(i), double(j)});
    const Triangulation a = delaunay_2d(pts);
    const Triangulation b = delaunay_2d(pts);
    EXPECT_EQ(a.faces, b.faces);
    EXPECT_EQ(a.finite_faces().size(), 2u * 11 * 11);
}

TEST(SphereHull, MatchesBruteForce) {
    const auto p = generate_sphere(61);
    std::vector<Vec3> pts;
    for (const auto& s : p.sites) pts.push_back(s.xyz);
    const Triangulation t = sphere_hull(pts);
    expect_consistent(t);
    EXPECT_EQ(t.faces.size(), 2u * 61 - 4);
    EXPECT_EQ(sorted_faces(t.faces), sorted_faces(oracle::brute_hull(pts)));
    // counter-clockwise seen from outside
    for (const auto& f : t.faces) {
        const Vec3 nrm = cross(pts[f[1]] - pts[f[0]], pts[f[2]] - pts[f[0]]);
        EXPECT_GT(dot(nrm, pts[f[0]]), 0);
    }
}

TEST(SphereHull, RandomPoints) {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> g;
    std::vector<Vec3> pts;
    for (int i = 0; i < 80; ++i) pts.push_back(normalized(Vec3{g(rng), g(rng), g(rng)}));
    const Triangulation t = sphere_hull(pts);
    EXPECT_EQ(sorted_faces(t.faces), sorted_faces(oracle::brute_hull(pts)));
}

TEST(SphereHull, Errors) {
    const std::vector<Vec3> three{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    EXPECT_THROW(sphere_hull(three), DegenerateInputError);
    const std::vector<Vec3> dup{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, 1, 0}};
    EXPECT_THROW(sphere_hull(dup), DuplicateSitesError);
}
