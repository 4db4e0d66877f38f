#include "sykspike/genfunc.hpp"

#include "sykspike/error.hpp"
#include "sykspike/qcomb.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace sykspike::genfunc {

namespace {

void check_p(int p) {
    if (p < 1) throw DomainError("moment index must be >= 1, got " + std::to_string(p));
}

std::vector<BivariatePoly> rt_table(int max_i) {
    std::vector<BivariatePoly> rt;
    rt.reserve(max_i + 1);
    for (int i = 0; i <= max_i; ++i) rt.push_back(BivariatePoly::from_q(qcomb::rt_polynomial(i)));
    return rt;
}

BivariatePoly power(const BivariatePoly& base, int exponent) {
    BivariatePoly out(1);
    for (int e = 0; e < exponent; ++e) out = out * base;
    return out;
}

}  // namespace

Series series_R(std::size_t order) {
    Series r(order);
    for (std::size_t i = 0; 2 * i <= order; ++i) {
        r[2 * i] = BivariatePoly::from_q(qcomb::rt_polynomial(static_cast<int>(i)));
    }
    return r;
}

MomentValue moments_closed(int p) {
    check_p(p);
    const int jmax = (p - 1) / 2;
    const auto rt = rt_table(jmax);
    BivariatePoly total;
    for (int j = 0; j <= jmax; ++j) {
        const int free_slots = p - 2 * j;
        BivariatePoly inner;
        qcomb::for_each_partition(j, [&](const qcomb::CompositionTerm& term) {
            const int r = term.parts();
            if (r > free_slots) return;
            BigInt denom = factorial(free_slots - r);
            BivariatePoly product(1);
            for (int i = 1; i <= j; ++i) {
                const int k = term.multiplicity[i - 1];
                if (k == 0) continue;
                denom *= factorial(k);
                product = product * power(rt[i], k);
            }
            Rational multinomial(factorial(free_slots), denom);
            multinomial.canonicalize();
            inner += product * multinomial;
        });
        Rational prefactor(p, free_slots);
        prefactor.canonicalize();
        total += inner * BivariatePoly::monomial(prefactor, free_slots, 0);
    }
    return {p, std::move(total)};
}

MomentValue moments_composition(int p) {
    check_p(p);
    const int jmax = (p - 1) / 2;
    const auto rt = rt_table(jmax);
    BivariatePoly total;
    for (int j = 0; j <= jmax; ++j) {
        const int free_slots = p - 2 * j;
        BivariatePoly inner;
        qcomb::for_each_composition(j, [&](std::span<const int> parts) {
            const auto l = static_cast<std::int64_t>(parts.size());
            const BigInt ways = binomial(free_slots, l);
            if (ways == 0) return;
            BivariatePoly product(1);
            for (int part : parts) product = product * rt[part];
            inner += product * Rational(ways);
        });
        Rational prefactor(p, free_slots);
        prefactor.canonicalize();
        total += inner * BivariatePoly::monomial(prefactor, free_slots, 0);
    }
    return {p, std::move(total)};
}

Series moments_gf(std::size_t order) {
    if (order < 1) throw DomainError("moments_gf needs order >= 1");
    const Series s = series_R(order).shifted().scaled(BivariatePoly::lambda());
    return s.log_one_over_one_minus().pointed();
}

Series moments_gf_product(std::size_t order) {
    if (order < 1) throw DomainError("moments_gf_product needs order >= 1");
    const Series r = series_R(order);
    const Series one = Series::constant(order, BivariatePoly(1));
    const Series pointing = one + r.pointed() / r;
    const Series s = r.shifted().scaled(BivariatePoly::lambda());
    return pointing * (s / (one - s));
}

double moments_asymptotic(int p, double lambda1, double e_split) {
    check_p(p);
    if (!(lambda1 > 0.0)) throw DomainError("moments_asymptotic needs lambda1 > 0");
    if (!(e_split > lambda1)) throw DomainError("moments_asymptotic needs E_split > lambda1");
    const double ratio = e_split / lambda1 - 1.0;
    double sum = 0.0;
    double binom = 1.0;
    double rpow = 1.0;
    for (int j = 0; j <= (p - 1) / 2; ++j) {
        sum += binom * rpow;
        binom = binom * (p - j) / (j + 1);
        rpow *= ratio;
    }
    return std::pow(lambda1, p) * sum;
}

}  // namespace sykspike::genfunc
