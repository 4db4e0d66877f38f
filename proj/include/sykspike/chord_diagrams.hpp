#pragma once

#include "sykspike/qpolynomial.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sykspike::qcomb {

inline constexpr int kDefaultExhaustiveLimit = 8;
/// Storage capacity of ChordDiagram; the configured limit may not exceed it.
inline constexpr int kMaxChords = 12;

using Chord = std::pair<std::uint8_t, std::uint8_t>;

/// Perfect matching of the points 1..2n together with its crossing count.
/// Chords are stored with first < second, sorted by first endpoint.
struct ChordDiagram {
    std::uint8_t size = 0;
    std::array<Chord, kMaxChords> chords{};
    int crossings = 0;

    std::span<const Chord> matching() const { return {chords.data(), size}; }
    friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) {
        return a.crossings == b.crossings &&
               std::equal(a.matching().begin(), a.matching().end(), b.matching().begin(),
                          b.matching().end());
    }
};

/// Pairs (a<b), (c<d) with a < c < b < d, counted directly in O(n^2).
int count_crossings(std::span<const Chord> matching);

/// All (2n-1)!! matchings of 2n points in lexicographic order. Work is split
/// over the partner of point 1 with OpenMP; the result order does not depend
/// on the thread count.
std::vector<ChordDiagram> enumerate_chord_diagrams(int n, int limit = kDefaultExhaustiveLimit);
std::vector<ChordDiagram> enumerate_chord_diagrams_serial(int n, int limit = kDefaultExhaustiveLimit);

/// Sum of q^{crossings} over all matchings, without materializing them.
QPolynomial crossing_polynomial(int n, int limit = kDefaultExhaustiveLimit);
QPolynomial crossing_polynomial_serial(int n, int limit = kDefaultExhaustiveLimit);

}  // namespace sykspike::qcomb
