#include "sykspike/chord_diagrams.hpp"

#include "sykspike/error.hpp"

#include <bit>
#include <string>

namespace sykspike::qcomb {

namespace {

void check_size(int n, int limit) {
    if (n < 1) throw DomainError("chord diagram size must be positive, got " + std::to_string(n));
    if (limit > kMaxChords) limit = kMaxChords;
    if (n > limit) {
        throw SizeLimitError("exhaustive chord enumeration capped at n=" + std::to_string(limit) +
                             ", got n=" + std::to_string(n));
    }
}

// Points are 0-based here. `used` marks matched points, `right_ends` marks the
// right endpoints of chords already placed. The smallest free point always
// opens the next chord, so every placed chord starts left of it and a new chord
// (a, b) crosses exactly the placed chords whose right end lies in (a, b).
template <class Visit>
void extend(int points, std::uint32_t used, std::uint32_t right_ends, int crossings, ChordDiagram& cur,
            Visit& visit) {
    if (cur.size * 2 == points) {
        cur.crossings = crossings;
        visit(cur);
        return;
    }
    const int a = std::countr_one(used);
    for (int b = a + 1; b < points; ++b) {
        const std::uint32_t bit = 1u << b;
        if (used & bit) continue;
        const std::uint32_t between = (bit - 1u) & ~((2u << a) - 1u);
        const int added = std::popcount(right_ends & between);
        cur.chords[cur.size++] = {static_cast<std::uint8_t>(a + 1), static_cast<std::uint8_t>(b + 1)};
        extend(points, used | (1u << a) | bit, right_ends | bit, crossings + added, cur, visit);
        --cur.size;
    }
}

// Runs the enumeration restricted to the branch where point 0 pairs with `partner`.
template <class Visit>
void run_branch(int n, int partner, Visit& visit) {
    ChordDiagram cur;
    cur.chords[0] = {1, static_cast<std::uint8_t>(partner + 1)};
    cur.size = 1;
    extend(2 * n, 1u | (1u << partner), 1u << partner, 0, cur, visit);
}

std::vector<BigInt> histogram_to_coeffs(const std::vector<std::uint64_t>& hist) {
    std::vector<BigInt> coeffs;
    coeffs.reserve(hist.size());
    for (std::uint64_t c : hist) coeffs.emplace_back(static_cast<unsigned long>(c));
    return coeffs;
}

}  // namespace

int count_crossings(std::span<const Chord> matching) {
    int total = 0;
    for (const auto& [a, b] : matching) {
        for (const auto& [c, d] : matching) {
            if (a < c && c < b && b < d) ++total;
        }
    }
    return total;
}

std::vector<ChordDiagram> enumerate_chord_diagrams_serial(int n, int limit) {
    check_size(n, limit);
    std::vector<ChordDiagram> out;
    auto push = [&out](const ChordDiagram& d) { out.push_back(d); };
    for (int partner = 1; partner < 2 * n; ++partner) run_branch(n, partner, push);
    return out;
}

std::vector<ChordDiagram> enumerate_chord_diagrams(int n, int limit) {
    check_size(n, limit);
    const int branches = 2 * n - 1;
    std::vector<std::vector<ChordDiagram>> parts(branches);
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < branches; ++i) {
        auto push = [&part = parts[i]](const ChordDiagram& d) { part.push_back(d); };
        run_branch(n, i + 1, push);
    }
    std::vector<ChordDiagram> out;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    out.reserve(total);
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

QPolynomial crossing_polynomial_serial(int n, int limit) {
    check_size(n, limit);
    std::vector<std::uint64_t> hist(n * (n - 1) / 2 + 1, 0);
    auto tally = [&hist](const ChordDiagram& d) { ++hist[d.crossings]; };
    for (int partner = 1; partner < 2 * n; ++partner) run_branch(n, partner, tally);
    return QPolynomial(histogram_to_coeffs(hist));
}

QPolynomial crossing_polynomial(int n, int limit) {
    check_size(n, limit);
    const int branches = 2 * n - 1;
    const std::size_t width = n * (n - 1) / 2 + 1;
    std::vector<std::vector<std::uint64_t>> parts(branches, std::vector<std::uint64_t>(width, 0));
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < branches; ++i) {
        auto tally = [&h = parts[i]](const ChordDiagram& d) { ++h[d.crossings]; };
        run_branch(n, i + 1, tally);
    }
    std::vector<std::uint64_t> hist(width, 0);
    for (const auto& p : parts)
        for (std::size_t k = 0; k < width; ++k) hist[k] += p[k];
    return QPolynomial(histogram_to_coeffs(hist));
}

}  // namespace sykspike::qcomb
