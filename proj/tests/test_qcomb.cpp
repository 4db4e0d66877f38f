#include "sykspike/chord_diagrams.hpp"
#include "sykspike/error.hpp"
#include "sykspike/qcomb.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

using namespace sykspike;
using namespace sykspike::qcomb;

namespace {

Rational frac(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Matchings by recursive pairing of the first unmatched point; crossings
// counted afterwards. Shares nothing with the library enumerator.
void all_matchings(std::vector<int>& partner, std::vector<std::vector<int>>& out) {
    const auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
        out.push_back(partner);
        return;
    }
    const int a = static_cast<int>(it - partner.begin());
    for (int b = a + 1; b < static_cast<int>(partner.size()); ++b) {
        if (partner[b] != -1) continue;
        partner[a] = b;
        partner[b] = a;
        all_matchings(partner, out);
        partner[a] = partner[b] = -1;
    }
}

int crossings_of(const std::vector<int>& partner) {
    int c = 0;
    const int m = static_cast<int>(partner.size());
    for (int a = 0; a < m; ++a)
        for (int c1 = a + 1; c1 < m; ++c1) {
            const int b = partner[a], d = partner[c1];
            if (a < b && c1 < d && a < c1 && c1 < b && b < d) ++c;
        }
    return c;
}

}  // namespace

TEST_CASE("RT polynomial small cases") {
    CHECK(rt_polynomial(0) == QPolynomial{1});
    CHECK(rt_polynomial(1) == QPolynomial{1});
    CHECK(rt_polynomial(2) == QPolynomial{2, 1});
    CHECK(rt_polynomial(3) == QPolynomial{5, 6, 3, 1});
    CHECK(rt_polynomial(2).to_string() == "2 + q");
    CHECK_THROWS_AS(rt_polynomial(-1), DomainError);
}

TEST_CASE("RT matches an independent matching enumeration for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> partner(2 * n, -1);
        std::vector<std::vector<int>> all;
        all_matchings(partner, all);
        std::map<int, long> hist;
        for (const auto& m : all) ++hist[crossings_of(m)];
        const auto rt = rt_polynomial(n);
        for (const auto& [k, count] : hist) CHECK(rt.coeff(k) == count);
        CHECK(rt.degree() == n * (n - 1) / 2);
    }
}

TEST_CASE("RT equals the exhaustive crossing polynomial for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        INFO("n = " << n);
        CHECK(crossing_polynomial(n) == rt_polynomial(n));
    }
}

TEST_CASE("chord enumeration: count, order, crossings and serial agreement") {
    for (int n = 1; n <= 6; ++n) {
        const auto par = enumerate_chord_diagrams(n);
        const auto ser = enumerate_chord_diagrams_serial(n);
        REQUIRE(par.size() == odd_double_factorial(n).get_ui());
        CHECK(par == ser);
        for (std::size_t i = 0; i < par.size(); ++i) {
            CHECK(par[i].crossings == count_crossings(par[i].matching()));
            if (i > 0) {
                const auto a = par[i - 1].matching(), b = par[i].matching();
                CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
            }
        }
    }
    CHECK(crossing_polynomial(7) == crossing_polynomial_serial(7));
}

TEST_CASE("chord enumeration limits") {
    CHECK_THROWS_AS(enumerate_chord_diagrams(0), DomainError);
    CHECK_THROWS_AS(enumerate_chord_diagrams(9), SizeLimitError);
    CHECK_THROWS_AS(crossing_polynomial(9), SizeLimitError);
    CHECK_THROWS_AS(crossing_polynomial(5, 4), SizeLimitError);
}

TEST_CASE("count_crossings on hand examples") {
    const std::vector<Chord> nested{{1, 4}, {2, 3}};
    const std::vector<Chord> crossed{{1, 3}, {2, 4}};
    CHECK(count_crossings(nested) == 0);
    CHECK(count_crossings(crossed) == 1);
    const std::vector<Chord> full{{1, 4}, {2, 5}, {3, 6}};
    CHECK(count_crossings(full) == 3);
}

TEST_CASE("RT at q = 1 and q = 0 for n <= 64") {
    for (int n = 0; n <= 64; ++n) {
        const auto rt = rt_polynomial(n);
        CHECK(rt.evaluate(BigInt(1)) == odd_double_factorial(n));
        CHECK(rt.evaluate(BigInt(0)) == catalan(n));
    }
}

TEST_CASE("rt_value agrees with the exact polynomial") {
    for (int n = 0; n <= 20; ++n)
        for (double q : {0.0, 0.1266, 0.5, 0.9, 1.0}) {
            const double exact = rt_polynomial(n).evaluate(q);
            CHECK(rt_value(n, q) == Catch::Approx(exact).epsilon(1e-13));
        }
}

TEST_CASE("partitions and compositions") {
    int count = 0;
    for_each_partition(10, [&](const CompositionTerm& t) {
        CHECK(t.weight() == 10);
        ++count;
    });
    CHECK(count == 42);
    count = 0;
    for_each_partition(0, [&](const CompositionTerm& t) {
        CHECK(t.parts() == 0);
        ++count;
    });
    CHECK(count == 1);
    for (int j = 1; j <= 10; ++j) {
        long c = 0;
        for_each_composition(j, [&](std::span<const int> parts) {
            CHECK(std::accumulate(parts.begin(), parts.end(), 0) == j);
            ++c;
        });
        CHECK(c == (1L << (j - 1)));
    }
}

TEST_CASE("necklace counts with the Catalan block") {
    const auto cat = catalan_block(20);
    CHECK(necklace_count(1, cat) == 1);
    CHECK(necklace_count(3, cat) == 10);
    CHECK(necklace_count(4, cat) == 35);
    for (int n = 1; n <= 15; ++n) {
        const Rational v = necklace_count(n, cat);
        CHECK(v.get_den() == 1);
        CHECK(v > 0);
        // 1/(1 - zC) = C, and n [z^n] log C(z) = binom(2n-1, n).
        CHECK(v == Rational(binomial(2 * n - 1, n)));
    }
    CHECK_THROWS_AS(necklace_count(5, std::span<const Rational>(cat.data(), 3)), DomainError);
    CHECK_THROWS_AS(necklace_count(0, cat), DomainError);
}

TEST_CASE("appendix S closed form and brute force") {
    CHECK(appendix_S(10, 3) == 48);
    CHECK(appendix_S(3, 1) == 1);
    CHECK(appendix_S(20, 5) == 7752);
    CHECK(appendix_S(4, 1) == 2);
    for (int p = 1; p <= 12; ++p) CHECK(appendix_S(p, 0) == 1);
    CHECK(appendix_S_bruteforce(10, 3) == 48);
    CHECK(appendix_S_bruteforce(20, 5) == 7752);
    CHECK(appendix_S_bruteforce(4, 1) == 2);
    for (int p = 1; p <= 30; ++p)
        for (int j = 0; j <= std::min((p - 1) / 2, kBruteforcePartitionLimit); ++j) {
            INFO("p = " << p << ", j = " << j);
            CHECK(appendix_S(p, j) == appendix_S_bruteforce(p, j));
        }
    CHECK_THROWS_AS(appendix_S(4, 2), DomainError);
    CHECK_THROWS_AS(appendix_S(4, -1), DomainError);
    CHECK_THROWS_AS(appendix_S_bruteforce(40, 13), SizeLimitError);
}

TEST_CASE("qtilde closed values") {
    CHECK(qtilde_exact(24, 4) == frac(1346, 10626));
    CHECK(qtilde(24, 4) == Catch::Approx(0.126671).margin(1e-6));
    for (int N : {4, 10, 24}) CHECK(qtilde_exact(N, 0) == 1);
    CHECK_THROWS_AS(qtilde(4, 5), DomainError);
}

TEST_CASE("qtilde equals the subset-overlap sign average") {
    // Average of (-1)^{|A ∩ B|} over all p-subsets B for a fixed p-subset A.
    for (int N : {6, 9, 12, 14})
        for (int p : {1, 2, 3, 4}) {
            const std::uint32_t a = (1u << p) - 1;
            long sum = 0, count = 0;
            for (std::uint32_t b = 0; b < (1u << N); ++b) {
                if (std::popcount(b) != p) continue;
                sum += (std::popcount(a & b) % 2) ? -1 : 1;
                ++count;
            }
            CHECK(qtilde_exact(N, p) == frac(sum, count));
        }
}

TEST_CASE("qtilde range, monotonicity and double-scaling limit") {
    for (int p : {2, 3, 4}) {
        double prev = -1.0;
        for (int N = 2 * p * p; N <= 400; ++N) {
            const double v = qtilde(N, p);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
            CHECK(v > prev);
            prev = v;
        }
    }
    CHECK(qtilde(1000, 4) == Catch::Approx(std::exp(-2.0 * 16 / 1000)).epsilon(1e-3));
}
