#pragma once

// Closed-form side of the model: the chord generating function R(z,q), the
// critical coupling, the regime of the composition 1/(1 - lambda1 z R(z,q)),
// the split eigenvalue and the q-Hermite bulk density.

#include <optional>
#include <string>

namespace sykspike::spectral {

struct DeformationParams {
    double q = 0.0;        // crossing weight, 0 <= q < 1
    double lambda1 = 0.0;  // rank-one source strength, > 0

    /// Throws DomainError unless 0 <= q < 1 and lambda1 > 0.
    void validate() const;
};

enum class Regime { Subcritical, Critical, Supercritical };

std::string to_string(Regime r);

struct RegimeReport {
    Regime regime = Regime::Subcritical;
    double rho_C = 0.0;           // dominant singularity of 1/(1 - lambda1 z R)
    double alpha_exponent = 0.0;  // +1/2, -1/2 or -1 in (rho_C - z)^alpha
    double tau_g = 0.0;           // z R(z,q) at z = rho_g
    double rho_g = 0.0;           // sqrt(1-q)/2
    double lambda_critical = 0.0;
    std::optional<double> e_split;  // present iff Supercritical
};

inline constexpr double kCriticalTolerance = 1e-12;

/// sum_{n>=0} (-1)^n q^{n(n+1)/2}, truncated once terms drop below `tol`.
double theta_sum(double q, double tol = 1e-15);

/// R(z,q) = sqrt(1-q)/z sum_n (-1)^n q^{n(n+1)/2} w^{2n+1},
/// w = (1 - sqrt(1 - 4z^2/(1-q))) / (2z/sqrt(1-q)), for 0 < z <= sqrt(1-q)/2.
double R_closed(double z, double q);

double rho_g(double q);
double tau_g(double q);
double lambda_critical(double q);
/// Edge of the bulk support, 2/sqrt(1-q).
double spectral_edge(double q);

RegimeReport classify_regime(const DeformationParams& params);

struct SecularOptions {
    double abs_tol = 1e-10;
    int max_iter = 200;
};

/// Root E > 2/sqrt(1-q) of E / (lambda1 R(1/E, q)) = 1. Throws NoRootError
/// when lambda1 <= lambda_critical(q).
double solve_secular(const DeformationParams& params, const SecularOptions& opts = {});

/// Residual E / (lambda1 R(1/E, q)) - 1.
double secular_residual(double e, const DeformationParams& params);

/// Smallest k with q^k < 1e-12 (1 when q = 0).
int default_product_truncation(double q);

/// q-Hermite weight c sqrt(1-x^2) prod_{k=1}^{k_max} (1 - 4x^2 q^k/(1+q^k)^2),
/// x = E / edge, normalized to unit mass by tanh-sinh quadrature.
class QHermiteDensity {
public:
    explicit QHermiteDensity(double q, std::optional<int> k_max = std::nullopt);

    double operator()(double e) const { return normalization_c_ * unnormalized(e); }
    double unnormalized(double e) const;

    double q() const noexcept { return q_; }
    double normalization_c() const noexcept { return normalization_c_; }
    int product_truncation() const noexcept { return k_max_; }
    double support_edge() const noexcept { return edge_; }

private:
    double q_;
    int k_max_;
    double edge_;
    double normalization_c_ = 1.0;
};

/// One-shot evaluation; builds (and normalizes) the density for each call.
double rho_qh(double e, double q, std::optional<int> k_max = std::nullopt);

struct DeltaComponent {
    double position = 0.0;
    double weight = 0.0;
};

/// Ensemble density: the bulk plus, above criticality, a point mass 1/dim at E_split.
struct DensityModel {
    QHermiteDensity bulk;
    std::optional<DeltaComponent> delta;
    RegimeReport regime;
};

DensityModel density_model(const DeformationParams& params, double dim);

}  // namespace sykspike::spectral
