#include "phyllo/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phyllo {

namespace {

std::array<std::int64_t, max_fib_rank + 1> make_table() {
    std::array<std::int64_t, max_fib_rank + 1> t{};
    t[0] = 0;
    t[1] = 1;
    for (int u = 2; u <= max_fib_rank; ++u) t[u] = t[u - 1] + t[u - 2];
    return t;
}

const std::array<std::int64_t, max_fib_rank + 1>& table() {
    static const auto t = make_table();
    return t;
}

}  // namespace

std::int64_t fibonacci(int u) {
    if (u < 0 || u > max_fib_rank)
        throw std::overflow_error("fibonacci: rank " + std::to_string(u) + " outside [0, 90]");
    return table()[u];
}

int fibonacci_rank(std::int64_t value) {
    if (value < 1) return -1;
    const auto& t = table();
    auto it = std::lower_bound(t.begin() + 2, t.end(), value);
    if (it == t.end() || *it != value) return -1;
    return static_cast<int>(it - t.begin());
}

double golden_ratio() {
    static const double tau = static_cast<double>((1.0L + std::sqrt(5.0L)) / 2.0L);
    return tau;
}

double golden_divergence() {
    static const double lambda = static_cast<double>(2.0L / (1.0L + std::sqrt(5.0L)));
    return lambda;
}

Rational golden_approximant(int u) {
    if (u < 2 || u > max_fib_rank)
        throw std::out_of_range("golden_approximant: rank " + std::to_string(u) + " outside [2, 90]");
    return {fibonacci(u), fibonacci(u - 1)};
}

std::size_t LSWord::count(char c) const {
    return static_cast<std::size_t>(std::count(symbols.begin(), symbols.end(), c));
}

bool LSWord::well_formed() const {
    return !symbols.empty() &&
           std::all_of(symbols.begin(), symbols.end(), [](char c) { return c == 'L' || c == 'S'; });
}

LSWord inflate(const LSWord& word) {
    if (word.symbols.empty()) throw std::invalid_argument("inflate: empty word");
    LSWord out;
    out.cyclic = word.cyclic;
    out.symbols.reserve(word.symbols.size() * 2);
    for (char c : word.symbols) {
        if (c == 'L')
            out.symbols += "LS";
        else if (c == 'S')
            out.symbols += 'L';
        else
            throw std::invalid_argument(std::string("inflate: symbol '") + c + "' is not L or S");
    }
    return out;
}

LSWord inflate_times(LSWord word, int times) {
    for (int k = 0; k < times; ++k) word = inflate(word);
    return word;
}

namespace {

// Booth's least-rotation algorithm.
std::size_t least_rotation(std::string_view s) {
    const std::size_t n = s.size();
    if (n == 0) return 0;
    std::vector<long> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        char sj = s[j % n];
        long i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (sj != s[(k + i + 1) % n]) {
            if (sj < s[k % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

std::string rotated(std::string_view s, std::size_t k) {
    std::string out(s.substr(k));
    out.append(s.substr(0, k));
    return out;
}

}  // namespace

std::string canonical_form(std::string_view symbols) {
    std::string fwd = rotated(symbols, least_rotation(symbols));
    std::string rev(symbols.rbegin(), symbols.rend());
    std::string bwd = rotated(rev, least_rotation(rev));
    return std::min(fwd, bwd);
}

bool equivalent_words(const LSWord& a, const LSWord& b) {
    if (a.symbols.size() != b.symbols.size()) return false;
    if (!a.cyclic && !b.cyclic) {
        if (a.symbols == b.symbols) return true;
        return std::string(a.symbols.rbegin(), a.symbols.rend()) == b.symbols;
    }
    return canonical_form(a.symbols) == canonical_form(b.symbols);
}

CellType cell_type_from_sides(int sides) {
    switch (sides) {
        case 4: return CellType::square;
        case 5: return CellType::pentagon;
        case 6: return CellType::hexagon;
        case 7: return CellType::heptagon;
        default: return CellType::other;
    }
}

const char* cell_type_name(CellType t) {
    switch (t) {
        case CellType::square: return "square";
        case CellType::pentagon: return "pentagon";
        case CellType::hexagon: return "hexagon";
        case CellType::heptagon: return "heptagon";
        default: return "other";
    }
}

StripSequence strip_sequence(int u) {
    if (u < 3 || u > 40)
        throw std::out_of_range("strip_sequence: rank " + std::to_string(u) + " outside [3, 40]");
    const std::int64_t fu = fibonacci(u);
    const std::int64_t fnext = fibonacci(u + 1);
    const std::int64_t fprev = fibonacci(u - 1);
    const std::int64_t total = fibonacci(u + 2);
    const std::int64_t sign = (u % 2 == 1) ? 1 : -1;   // (-1)^(u+1)

    // The period vector of the strip is (f_u, f_{u+1}); a lattice point's
    // position along the strip is its projection onto that vector, kept as
    // the exact integer numerator over |V|^2.
    using wide = __int128;
    const wide vx = fu, vy = fnext;
    const wide norm2 = vx * vx + vy * vy;

    StripSequence out;
    out.rank = u;
    out.cells.reserve(static_cast<std::size_t>(total));
    std::vector<wide> along(static_cast<std::size_t>(total));

    for (std::int64_t k = 0; k < total; ++k) {
        wide px = static_cast<wide>(sign) * k * fprev;
        wide py = static_cast<wide>(sign) * k * fu;
        wide proj = px * vx + py * vy;
        wide m = proj / norm2;
        if (proj - m * norm2 < 0) m -= 1;
        px -= m * vx;
        py -= m * vy;
        StripCell c;
        c.i = static_cast<std::int64_t>(px);
        c.j = static_cast<std::int64_t>(py);
        c.label = k;
        c.type = k < fu ? CellType::heptagon : (k < fu + fprev ? CellType::hexagon : CellType::pentagon);
        out.cells.push_back(c);
        along[static_cast<std::size_t>(k)] = px * vx + py * vy;
    }
    out.heptagons = fu;
    out.hexagons = fprev;
    out.pentagons = fu;

    // Heptagon k pairs with the pentagon one lattice step to the left, whose
    // label is k + f_{u+1}.
    struct Event {
        wide key;
        bool hexagon;
    };
    std::vector<Event> events;
    events.reserve(static_cast<std::size_t>(fu + fprev));
    const wide period2 = 2 * norm2;
    for (std::int64_t k = 0; k < fu; ++k) {
        out.dipoles.push_back({k, k + fnext});
        wide key = 2 * along[static_cast<std::size_t>(k)] - vx;
        key %= period2;
        if (key < 0) key += period2;
        events.push_back({key, false});
    }
    for (std::int64_t k = fu; k < fu + fprev; ++k)
        events.push_back({2 * along[static_cast<std::size_t>(k)], true});
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.hexagon && !b.hexagon;
    });

    // Dipoles between two consecutive hexagons form one group: a pair reads L,
    // a singleton S.
    std::size_t start = 0;
    while (start < events.size() && !events[start].hexagon) ++start;
    out.word.cyclic = true;
    if (start == events.size()) return out;
    int run = 0;
    for (std::size_t step = 1; step <= events.size(); ++step) {
        const Event& e = events[(start + step) % events.size()];
        if (!e.hexagon) {
            ++run;
            continue;
        }
        if (run > 0) out.word.symbols += run == 2 ? 'L' : (run == 1 ? 'S' : '?');
        run = 0;
    }
    return out;
}

}  // namespace phyllo
