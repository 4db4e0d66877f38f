#include "sykspike/spectral.hpp"

#include "sykspike/error.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <fmt/format.h>

namespace sykspike::spectral {

namespace {

void check_q(double q) {
    if (!(q >= 0.0 && q < 1.0)) throw DomainError(fmt::format("q must lie in [0,1), got {}", q));
}

}  // namespace

void DeformationParams::validate() const {
    check_q(q);
    if (!(lambda1 > 0.0)) throw DomainError(fmt::format("lambda1 must be > 0, got {}", lambda1));
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::Subcritical: return "subcritical";
        case Regime::Critical: return "critical";
        case Regime::Supercritical: return "supercritical";
    }
    return "unknown";
}

double theta_sum(double q, double tol) {
    check_q(q);
    double sum = 0.0;
    for (int k = 0;; ++k) {
        const double term = std::pow(q, 0.5 * k * (k + 1));
        if (k > 0 && term < tol) break;
        sum += (k % 2 == 0) ? term : -term;
        if (q == 0.0) break;
    }
    return sum;
}

double rho_g(double q) {
    check_q(q);
    return 0.5 * std::sqrt(1.0 - q);
}

double tau_g(double q) { return std::sqrt(1.0 - q) * theta_sum(q); }

double lambda_critical(double q) { return 1.0 / tau_g(q); }

double spectral_edge(double q) {
    check_q(q);
    return 2.0 / std::sqrt(1.0 - q);
}

double R_closed(double z, double q) {
    check_q(q);
    const double s = std::sqrt(1.0 - q);
    const double radius = 0.5 * s;
    if (!(z > 0.0 && z <= radius)) {
        throw DomainError(fmt::format("R_closed needs 0 < z <= sqrt(1-q)/2 = {}, got {}", radius, z));
    }
    const double x = z / s;
    // (1 - sqrt(1-4x^2)) / (2x) without the cancellation at small x.
    const double w = 2.0 * x / (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * x * x)));
    if (q == 0.0) return w / z;
    double sum = 0.0;
    const double w2 = w * w;
    double wpow = w;
    for (int n = 0;; ++n) {
        const double term = std::pow(q, 0.5 * n * (n + 1)) * wpow;
        if (n > 0 && term < 1e-14) break;
        sum += (n % 2 == 0) ? term : -term;
        wpow *= w2;
    }
    return s / z * sum;
}

RegimeReport classify_regime(const DeformationParams& params) {
    params.validate();
    RegimeReport r;
    r.rho_g = rho_g(params.q);
    r.tau_g = tau_g(params.q);
    r.lambda_critical = 1.0 / r.tau_g;
    if (std::abs(params.lambda1 - r.lambda_critical) <= kCriticalTolerance) {
        r.regime = Regime::Critical;
        r.rho_C = r.rho_g;
        r.alpha_exponent = -0.5;
    } else if (params.lambda1 < r.lambda_critical) {
        r.regime = Regime::Subcritical;
        r.rho_C = r.rho_g;
        r.alpha_exponent = 0.5;
    } else {
        r.regime = Regime::Supercritical;
        r.e_split = solve_secular(params);
        r.rho_C = 1.0 / *r.e_split;
        r.alpha_exponent = -1.0;
    }
    return r;
}

double secular_residual(double e, const DeformationParams& params) {
    const double z = std::min(1.0 / e, rho_g(params.q));
    return e / (params.lambda1 * R_closed(z, params.q)) - 1.0;
}

double solve_secular(const DeformationParams& params, const SecularOptions& opts) {
    params.validate();
    const double lc = lambda_critical(params.q);
    if (!(params.lambda1 > lc)) {
        throw NoRootError(fmt::format("gap absent: lambda1 = {} does not exceed lambda_critical({}) = {}",
                                      params.lambda1, params.q, lc));
    }
    const double edge = spectral_edge(params.q);
    double lo = edge * (1.0 + 1e-9);
    double hi = params.lambda1 + 2.0 / ((1.0 - params.q) * params.lambda1) + 1.0;
    auto f = [&](double e) { return secular_residual(e, params); };
    double flo = f(lo);
    if (flo > 0.0) {
        // Root sits within 1e-9 relative of the edge (lambda1 barely supercritical).
        lo = edge;
        flo = f(lo);
    }
    const double fhi = f(hi);
    if (!(flo < 0.0 && fhi > 0.0)) {
        throw ConvergenceError(fmt::format("secular bracket [{}, {}] has no sign change ({}, {})", lo, hi, flo, fhi));
    }

    // Bisection down to a narrow bracket, then Newton safeguarded by the bracket.
    int iter = 0;
    while (hi - lo > 1e-6 && iter < opts.max_iter) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
        ++iter;
    }
    double e = 0.5 * (lo + hi);
    for (; iter < opts.max_iter; ++iter) {
        const double fe = f(e);
        if (fe == 0.0) return e;
        (fe < 0.0 ? lo : hi) = e;
        const double h = 1e-7 * e;
        const double slope = (f(e + h) - f(e - h)) / (2.0 * h);
        double next = e - fe / slope;
        if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - e);
        e = next;
        if (step < 0.01 * opts.abs_tol || hi - lo < opts.abs_tol) return e;
    }
    throw ConvergenceError("secular solve did not converge");
}

int default_product_truncation(double q) {
    check_q(q);
    if (q == 0.0) return 1;
    return std::max(1, static_cast<int>(std::floor(std::log(1e-12) / std::log(q))) + 1);
}

QHermiteDensity::QHermiteDensity(double q, std::optional<int> k_max)
    : q_(q), k_max_(k_max ? *k_max : default_product_truncation(q)), edge_(spectral_edge(q)) {
    if (k_max_ < 1) throw DomainError("q-Hermite product truncation must be >= 1");
    boost::math::quadrature::tanh_sinh<double> integrator;
    const double mass =
        integrator.integrate([this](double e) { return unnormalized(e); }, -edge_, edge_, 1e-13);
    normalization_c_ = 1.0 / mass;
}

double QHermiteDensity::unnormalized(double e) const {
    const double x = e / edge_;
    const double x2 = x * x;
    if (x2 >= 1.0) return 0.0;
    double value = std::sqrt(1.0 - x2);
    double qk = 1.0;
    for (int k = 1; k <= k_max_; ++k) {
        qk *= q_;
        const double denom = (1.0 + qk) * (1.0 + qk);
        value *= 1.0 - 4.0 * x2 * qk / denom;
    }
    return value;
}

double rho_qh(double e, double q, std::optional<int> k_max) { return QHermiteDensity(q, k_max)(e); }

DensityModel density_model(const DeformationParams& params, double dim) {
    if (!(dim >= 1.0)) throw DomainError("density_model needs dim >= 1");
    DensityModel model{QHermiteDensity(params.q), std::nullopt, classify_regime(params)};
    if (model.regime.e_split) model.delta = DeltaComponent{*model.regime.e_split, 1.0 / dim};
    return model;
}

}  // namespace sykspike::spectral
