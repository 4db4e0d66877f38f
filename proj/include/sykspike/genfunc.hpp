#pragma once

// Moments m_p of the rank-one deformed SYK model as exact polynomials in
// (lambda1, q), computed four independent ways:
//   closed      - double sum over partitions of j with multinomial weights
//   composition - the same sum regrouped over compositions of j
//   gf          - [z^p] of z d/dz log(1/(1 - lambda1 z R(z,q)))
//   gf_product  - [z^p] of (1 + z R'/R) * lambda1 z R / (1 - lambda1 z R)
// where R(z,q) = sum_i RT(i,q) z^{2i}.

#include "sykspike/bivariate.hpp"
#include "sykspike/power_series.hpp"

#include <cstddef>

namespace sykspike::genfunc {

using Series = PowerSeries<BivariatePoly>;

inline constexpr std::size_t kDefaultOrder = 24;

struct MomentValue {
    int p = 0;
    BivariatePoly value;

    double evaluate(double q, double lambda1) const { return value.evaluate(q, lambda1); }
    friend bool operator==(const MomentValue&, const MomentValue&) = default;
};

/// R(z,q) truncated after z^order.
Series series_R(std::size_t order = kDefaultOrder);

MomentValue moments_closed(int p);
MomentValue moments_composition(int p);

/// Coefficient of z^p equals m_p for 1 <= p <= order; the constant term is 0.
Series moments_gf(std::size_t order = kDefaultOrder);
Series moments_gf_product(std::size_t order = kDefaultOrder);

/// Large-p approximation lambda1^p sum_{j<=floor((p-1)/2)} binom(p,j) (E/lambda1 - 1)^j.
double moments_asymptotic(int p, double lambda1, double e_split);

}  // namespace sykspike::genfunc
