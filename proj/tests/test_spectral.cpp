#include "sykspike/error.hpp"
#include "sykspike/qcomb.hpp"
#include "sykspike/spectral.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace sykspike;
using namespace sykspike::spectral;

namespace {

// sum_{i <= steps/2} RT(i, q) z^{2i} as one weighted walk: each step carries a
// factor z, and closing one of k open chords carries [k]_q.
double R_walk(double z, double q, int steps) {
    std::vector<double> open(steps + 2, 0.0), next(steps + 2, 0.0);
    open[0] = 1.0;
    double total = 1.0;
    for (int t = 1; t <= steps; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        double qint = 0.0, qpow = 1.0;
        for (int k = 0; k <= steps; ++k) {
            if (k >= 1) {
                qint += qpow;
                qpow *= q;
            }
            if (open[k] == 0.0) continue;
            next[k + 1] += open[k] * z;
            if (k >= 1) next[k - 1] += open[k] * qint * z;
        }
        std::swap(open, next);
        if (t % 2 == 0) total += open[0];
    }
    return total;
}

double semicircle(double e) { return std::abs(e) < 2.0 ? std::sqrt(4.0 - e * e) / (2.0 * std::numbers::pi) : 0.0; }

// Integral over the support with E = edge cos(theta); the integrand is smooth
// and periodic in theta, so the trapezoid rule converges very fast.
double theta_trapezoid(const QHermiteDensity& rho, int n) {
    const double edge = rho.support_edge();
    double sum = 0.0;
    for (int i = 1; i < n; ++i) {
        const double t = std::numbers::pi * i / n;
        sum += rho(edge * std::cos(t)) * edge * std::sin(t);
    }
    return sum * std::numbers::pi / n;
}

double lambda_critical_oracle(double q) {
    long double theta = 0.0L, term = 1.0L;
    for (int n = 0; n < 200; ++n) {
        theta += (n % 2 ? -1.0L : 1.0L) * term;
        term *= std::pow(static_cast<long double>(q), n + 1);
        if (term < 1e-30L) break;
    }
    return static_cast<double>(1.0L / (std::sqrt(1.0L - q) * theta));
}

}  // namespace

TEST_CASE("theta sum") {
    CHECK(theta_sum(0.0) == 1.0);
    // Partial sum through n = 5; the alternating remainder is below the next term q^21.
    const double partial = 1 - 0.5 + 0.125 - 0.015625 + 0.0009765625 - 0.000030517578125;
    CHECK(theta_sum(0.5) > partial);
    CHECK(theta_sum(0.5) - partial < std::pow(0.5, 21));
}

TEST_CASE("R closed form at q = 0 is the Catalan generating function") {
    CHECK(R_closed(0.25, 0.0) == Catch::Approx(1.07180).margin(1e-5));
    for (double z : {0.01, 0.1, 0.25, 0.4, 0.49, 0.5}) {
        const double catalan_gf = (1.0 - std::sqrt(1.0 - 4.0 * z * z)) / (2.0 * z * z);
        CHECK(R_closed(z, 0.0) == Catch::Approx(catalan_gf).epsilon(1e-13));
    }
}

TEST_CASE("R closed form matches the chord series inside the disc") {
    for (double q : {0.0, 0.1, 0.12667, 0.3, 0.5, 0.9}) {
        const double rg = rho_g(q);
        for (double frac : {0.1, 0.5, 0.9}) {
            INFO("q = " << q << ", z/rho_g = " << frac);
            const double z = frac * rg;
            CHECK(R_closed(z, q) == Catch::Approx(R_walk(z, q, 800)).epsilon(1e-10));
        }
    }
}

TEST_CASE("radius, tau and critical coupling") {
    CHECK(rho_g(0.0) == 0.5);
    CHECK(tau_g(0.0) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(lambda_critical(0.0) == Catch::Approx(1.0).epsilon(1e-14));
    CHECK(lambda_critical(0.5) == Catch::Approx(2.31716).margin(1e-5));
    for (double q : {0.05, 0.12667, 0.3, 0.5, 0.7, 0.9})
        CHECK(lambda_critical(q) == Catch::Approx(lambda_critical_oracle(q)).epsilon(1e-12));
    // Critical coupling grows with q.
    double prev = 0.0;
    for (double q = 0.0; q < 0.95; q += 0.05) {
        CHECK(lambda_critical(q) > prev);
        prev = lambda_critical(q);
    }
}

TEST_CASE("spectral edge") {
    CHECK(spectral_edge(0.0) == 2.0);
    CHECK(spectral_edge(qcomb::qtilde(24, 4)) == Catch::Approx(2.140134).margin(1e-6));
}

TEST_CASE("regime classification") {
    CHECK(classify_regime({0.0, 0.5}).regime == Regime::Subcritical);
    CHECK(classify_regime({0.0, 1.0}).regime == Regime::Critical);
    const auto sup = classify_regime({0.0, 3.0});
    CHECK(sup.regime == Regime::Supercritical);
    REQUIRE(sup.e_split);
    CHECK(*sup.e_split == Catch::Approx(10.0 / 3.0).epsilon(1e-12));
    CHECK(!classify_regime({0.0, 0.5}).e_split);
    CHECK(classify_regime({0.0, 0.5}).alpha_exponent == 0.5);
    CHECK(classify_regime({0.0, 1.0}).alpha_exponent == -0.5);
    CHECK(sup.alpha_exponent == -1.0);
    CHECK(sup.rho_C < sup.rho_g);
    CHECK(to_string(Regime::Critical) == "critical");
    const auto table = classify_regime({qcomb::qtilde(24, 4), 3.0});
    CHECK(table.regime == Regime::Supercritical);
    CHECK(*table.e_split == Catch::Approx(3.33824460).margin(1e-8));
    CHECK_THROWS_AS(classify_regime({1.0, 3.0}), DomainError);
    CHECK_THROWS_AS(classify_regime({0.2, 0.0}), DomainError);
}

TEST_CASE("secular equation at q = 0 has the closed form lambda + 1/lambda") {
    for (double l : {1.5, 2.0, 3.0, 5.0}) CHECK(std::abs(solve_secular({0.0, l}) - (l + 1.0 / l)) < 1e-10);
    for (double l : {0.5, 0.99, 1.0}) CHECK_THROWS_AS(solve_secular({0.0, l}), NoRootError);
    const double near = solve_secular({0.0, 1.0001});
    CHECK(near > 2.0);
    CHECK(std::abs(near - (1.0001 + 1.0 / 1.0001)) < 1e-10);
}

TEST_CASE("secular root: table values, residual and monotonicity") {
    CHECK(std::abs(solve_secular({qcomb::qtilde(24, 4), 3.0}) - 3.33824460) < 1e-5);
    CHECK(std::abs(solve_secular({qcomb::qtilde(32, 4), 3.0}) - 3.34424154) < 1e-5);
    for (double q : {0.1, 0.5, 0.8}) {
        double prev = spectral_edge(q);
        for (double l = lambda_critical(q) * 1.01; l < 8.0; l += 0.37) {
            const DeformationParams params{q, l};
            const double e = solve_secular(params);
            CHECK(e > prev);
            CHECK(std::abs(secular_residual(e, params)) < 1e-9);
            prev = e;
        }
    }
}

TEST_CASE("secular root approaches the edge at the threshold") {
    for (double q : {0.0, 0.3, 0.5}) {
        const double lc = lambda_critical(q);
        const double e = solve_secular({q, lc * (1.0 + 1e-6)});
        CHECK(e >= spectral_edge(q));
        CHECK(e - spectral_edge(q) < 1e-3);
        CHECK_THROWS_AS(solve_secular({q, lc * (1.0 - 1e-6)}), NoRootError);
    }
}

TEST_CASE("product truncation") {
    CHECK(default_product_truncation(0.0) == 1);
    for (double q : {0.1, 0.5, 0.9}) {
        const int k = default_product_truncation(q);
        CHECK(std::pow(q, k) < 1e-12);
        CHECK(std::pow(q, k - 1) >= 1e-12);
    }
}

TEST_CASE("q = 0 density is the semicircle") {
    const QHermiteDensity rho(0.0);
    for (int i = 0; i < 200; ++i) {
        const double e = -2.0 + 4.0 * i / 199.0;
        CHECK(std::abs(rho(e) - semicircle(e)) <= 1e-8);
    }
    CHECK(rho.normalization_c() == Catch::Approx(1.0 / std::numbers::pi).epsilon(1e-10));
    CHECK(rho(0.0) == Catch::Approx(1.0 / std::numbers::pi).epsilon(1e-10));
}

TEST_CASE("density normalization, symmetry and support") {
    for (double q : {0.0, 0.1, 0.5, 0.9}) {
        INFO("q = " << q);
        const QHermiteDensity rho(q);
        CHECK(std::abs(theta_trapezoid(rho, 4000) - 1.0) <= 1e-8);
        const double edge = rho.support_edge();
        CHECK(rho(edge * 1.0001) == 0.0);
        CHECK(rho(-edge * 1.5) == 0.0);
        for (double x : {0.1, 0.4, 0.8, 0.99}) CHECK(rho(x * edge) == rho(-x * edge));
        CHECK(rho_qh(0.3, q) == Catch::Approx(rho(0.3)).epsilon(1e-12));
    }
}

TEST_CASE("density model carries a delta only above criticality") {
    const double q = qcomb::qtilde(24, 4);
    const auto sup = density_model({q, 3.0}, 4096.0);
    REQUIRE(sup.delta);
    CHECK(sup.delta->weight == 1.0 / 4096.0);
    CHECK(sup.delta->position == Catch::Approx(3.33824460).margin(1e-8));
    CHECK(!density_model({q, 1.0}, 4096.0).delta);
}
