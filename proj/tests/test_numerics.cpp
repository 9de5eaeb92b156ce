#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "phyllo/numerics.hpp"

using namespace phyllo;

TEST(Fibonacci, MatchesFastDoublingOracle) {
    for (int u = 0; u <= 90; ++u) EXPECT_EQ(fibonacci(u), oracle::fib(u)) << "u=" << u;
}

TEST(Fibonacci, KnownValues) {
    EXPECT_EQ(fibonacci(0), 0);
    EXPECT_EQ(fibonacci(7), 13);
    EXPECT_EQ(fibonacci(13), 233);
}

TEST(Fibonacci, RankOutOfRangeThrows) {
    EXPECT_THROW(fibonacci(-1), std::overflow_error);
    EXPECT_THROW(fibonacci(91), std::overflow_error);
}

TEST(Fibonacci, Cassini) {
    for (int u = 1; u < 90; ++u) {
        const __int128 lhs = static_cast<__int128>(fibonacci(u + 1)) * fibonacci(u - 1) -
                             static_cast<__int128>(fibonacci(u)) * fibonacci(u);
        EXPECT_EQ(static_cast<long>(lhs), u % 2 == 0 ? 1 : -1) << "u=" << u;
    }
}

TEST(Fibonacci, SumOfSquaresIdentity) {
    for (int u = 0; u <= 40; ++u) {
        const __int128 sq = static_cast<__int128>(fibonacci(u)) * fibonacci(u) +
                            static_cast<__int128>(fibonacci(u + 1)) * fibonacci(u + 1);
        EXPECT_TRUE(sq == fibonacci(2 * u + 1)) << "u=" << u;
    }
}

TEST(Fibonacci, Rank) {
    EXPECT_EQ(fibonacci_rank(13), 7);
    EXPECT_EQ(fibonacci_rank(55), 10);
    EXPECT_EQ(fibonacci_rank(1), 2);
    EXPECT_EQ(fibonacci_rank(4), -1);
    EXPECT_EQ(fibonacci_rank(0), -1);
    for (int u = 2; u <= 90; ++u) EXPECT_EQ(fibonacci_rank(fibonacci(u)), u == 2 ? 2 : u);
}

TEST(GoldenApproximant, Examples) {
    EXPECT_EQ(golden_approximant(2), (Rational{1, 1}));
    EXPECT_EQ(golden_approximant(7), (Rational{13, 8}));
    EXPECT_EQ(golden_approximant(13), (Rational{233, 144}));
    EXPECT_THROW(golden_approximant(1), std::out_of_range);
}

TEST(GoldenApproximant, AlternatesAndConverges) {
    const double tau = golden_ratio();
    double prev_err = INFINITY;
    // beyond u = 30 the error is below double resolution
    for (int u = 3; u <= 30; ++u) {
        const Rational q = golden_approximant(u);
        const double err = q.value() - tau;
        EXPECT_LT(std::fabs(err), prev_err);
        const double den = static_cast<double>(q.den);
        EXPECT_LT(std::fabs(err), 1.0 / (den * den));
        // f_u/f_{u-1} lies above tau for odd u
        EXPECT_EQ(err > 0, u % 2 == 1) << "u=" << u;
        prev_err = std::fabs(err);
    }
}

TEST(Golden, Constants) {
    EXPECT_NEAR(golden_ratio(), (1 + std::sqrt(5.0)) / 2, 1e-15);
    EXPECT_NEAR(golden_divergence() * golden_ratio(), 1.0, 1e-15);
}

TEST(Inflate, Examples) {
    EXPECT_EQ(inflate(LSWord{"S"}).symbols, "L");
    EXPECT_EQ(inflate(LSWord{"L"}).symbols, "LS");
    EXPECT_EQ(inflate(LSWord{"LSL"}).symbols, "LSLLS");
    EXPECT_TRUE(inflate(LSWord{"LS", true}).cyclic);
    EXPECT_FALSE(inflate(LSWord{"LS", false}).cyclic);
    EXPECT_THROW(inflate(LSWord{""}), std::invalid_argument);
}

TEST(Inflate, AgreesWithOracleSubstitution) {
    std::string w = "S";
    LSWord x{"S"};
    for (int k = 1; k <= 20; ++k) {
        w = oracle::substitute(w);
        x = inflate(x);
        ASSERT_EQ(x.symbols, w);
    }
}

TEST(Inflate, LengthAndSymbolCounts) {
    for (int k = 2; k <= 25; ++k) {
        const LSWord w = inflate_times(LSWord{"S"}, k);
        EXPECT_EQ(static_cast<std::int64_t>(w.symbols.size()), fibonacci(k + 1));
        EXPECT_EQ(static_cast<std::int64_t>(w.count('S')), fibonacci(k - 1));
    }
}

TEST(Words, CanonicalFormMatchesBruteForce) {
    for (int k = 1; k <= 12; ++k) {
        const std::string w = inflate_times(LSWord{"S"}, k).symbols;
        EXPECT_EQ(canonical_form(w), oracle::least_rotation_any_direction(w));
        const std::string rotated = w.substr(w.size() / 3) + w.substr(0, w.size() / 3);
        EXPECT_EQ(canonical_form(rotated), oracle::least_rotation_any_direction(w));
    }
    for (const char* w : {"LLSLS", "SSLLL", "LSLSLLSL", "L", "SSSS"})
        EXPECT_EQ(canonical_form(w), oracle::least_rotation_any_direction(w)) << w;
}

TEST(Words, EquivalenceModuloRotationAndReversal) {
    const LSWord a{"LSLLS", true};
    EXPECT_TRUE(equivalent_words(a, LSWord{"LLSLS", true}));
    EXPECT_TRUE(equivalent_words(a, LSWord{"SLLSL", true}));
    EXPECT_FALSE(equivalent_words(a, LSWord{"LSLS", true}));
    EXPECT_FALSE(equivalent_words(a, inflate(a)));
}

TEST(Words, WellFormed) {
    EXPECT_TRUE((LSWord{"LSL"}).well_formed());
    EXPECT_FALSE((LSWord{"LXL"}).well_formed());
    EXPECT_FALSE((LSWord{""}).well_formed());
}

TEST(CellTypes, FromSides) {
    EXPECT_EQ(cell_type_from_sides(4), CellType::square);
    EXPECT_EQ(cell_type_from_sides(5), CellType::pentagon);
    EXPECT_EQ(cell_type_from_sides(6), CellType::hexagon);
    EXPECT_EQ(cell_type_from_sides(7), CellType::heptagon);
    EXPECT_EQ(cell_type_from_sides(8), CellType::other);
    EXPECT_EQ(cell_type_from_sides(3), CellType::other);
}

TEST(Strip, SmallExamples) {
    const auto s3 = strip_sequence(3);
    EXPECT_EQ(s3.heptagons, 2);
    EXPECT_EQ(s3.hexagons, 1);
    EXPECT_EQ(s3.pentagons, 2);
    EXPECT_EQ(s3.cells.size(), 5u);

    const auto s7 = strip_sequence(7);
    EXPECT_EQ(s7.heptagons, 13);
    EXPECT_EQ(s7.hexagons, 8);
    EXPECT_EQ(s7.pentagons, 13);
    EXPECT_EQ(s7.cells.size(), 34u);

    const auto s10 = strip_sequence(10);
    EXPECT_EQ(s10.heptagons, 55);
    EXPECT_EQ(s10.hexagons, 34);
    EXPECT_EQ(s10.pentagons, 55);
}

TEST(Strip, TotalsAndDipoles) {
    for (int u = 3; u <= 24; ++u) {
        const auto s = strip_sequence(u);
        EXPECT_EQ(static_cast<std::int64_t>(s.cells.size()), 2 * fibonacci(u) + fibonacci(u - 1));
        EXPECT_EQ(static_cast<std::int64_t>(s.dipoles.size()), fibonacci(u));
        std::int64_t h = 0, x = 0, p = 0;
        for (const auto& c : s.cells) {
            h += c.type == CellType::heptagon;
            x += c.type == CellType::hexagon;
            p += c.type == CellType::pentagon;
            // the label is the position across the strip
            EXPECT_EQ(c.label, fibonacci(u) * c.j - fibonacci(u + 1) * c.i);
        }
        EXPECT_EQ(h, s.heptagons);
        EXPECT_EQ(x, s.hexagons);
        EXPECT_EQ(p, s.pentagons);
    }
}

TEST(Strip, WordsFollowInflation) {
    for (int u = 3; u < 26; ++u) {
        const auto a = strip_sequence(u);
        const auto b = strip_sequence(u + 1);
        EXPECT_TRUE(equivalent_words(inflate(a.word), b.word)) << "u=" << u;
        EXPECT_EQ(static_cast<std::int64_t>(a.word.symbols.size()), fibonacci(u - 1));
    }
}

TEST(Strip, RankRange) {
    EXPECT_THROW(strip_sequence(2), std::out_of_range);
    EXPECT_THROW(strip_sequence(41), std::out_of_range);
}
