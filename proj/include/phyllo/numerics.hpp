#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace phyllo {

// Largest rank whose Fibonacci number is computed; f_90 still fits in int64.
inline constexpr int max_fib_rank = 90;

std::int64_t fibonacci(int u);

// Rank u >= 2 with f_u == value, or -1 when value is not a Fibonacci number.
int fibonacci_rank(std::int64_t value);

double golden_ratio();
double golden_divergence();   // 1/tau

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// f_u / f_{u-1}
Rational golden_approximant(int u);

struct LSWord {
    std::string symbols;
    bool cyclic = false;

    std::size_t count(char c) const;
    bool well_formed() const;   // only 'L' and 'S'
};

LSWord inflate(const LSWord& word);
LSWord inflate_times(LSWord word, int times);

// Smallest rotation of the word or of its reverse.
std::string canonical_form(std::string_view symbols);
bool equivalent_words(const LSWord& a, const LSWord& b);

enum class CellType { square = 4, pentagon = 5, hexagon = 6, heptagon = 7, other = 0 };
CellType cell_type_from_sides(int sides);
const char* cell_type_name(CellType t);

struct StripCell {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t label = 0;   // f_u * j - f_{u+1} * i, in [0, f_{u+2})
    CellType type = CellType::hexagon;
};

struct StripDipole {
    std::int64_t heptagon = 0;   // labels
    std::int64_t pentagon = 0;
};

struct StripSequence {
    int rank = 0;
    std::vector<StripCell> cells;
    std::vector<StripDipole> dipoles;
    LSWord word;
    std::int64_t heptagons = 0;
    std::int64_t hexagons = 0;
    std::int64_t pentagons = 0;
};

// One period of the strip of slope f_u / f_{u-1}; 3 <= u <= 40. Memory grows
// like f_{u+2}, so ranks in the high thirties are only practical on large hosts.
StripSequence strip_sequence(int u);

}  // namespace phyllo
