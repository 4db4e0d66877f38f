#pragma once

#include "sykspike/error.hpp"
#include "sykspike/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace sykspike {

// Coefficient hooks for Rational; other coefficient rings supply the same
// two functions in their own namespace (found by ADL).
inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline std::optional<Rational> unit_inverse(const Rational& c) {
    if (sgn(c) == 0) return std::nullopt;
    return Rational(1) / c;
}

/// Truncated formal power series in z. Holds the coefficients of z^0..z^order;
/// everything at z^{order+1} and above is discarded. Binary operations on
/// series of different orders truncate to the smaller order.
///
/// `Coeff` must be a commutative ring with `Coeff(0)`, `Coeff(1)`, `+`, `-`,
/// `*`, multiplication by `Rational`, equality, and the hooks `is_zero` and
/// `unit_inverse`.
template <class Coeff>
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1, Coeff(0)) {}
    PowerSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Coeff(0));
    }

    static PowerSeries constant(std::size_t order, Coeff c) {
        PowerSeries s(order);
        s.coeffs_[0] = std::move(c);
        return s;
    }
    /// The series z (zero when order is 0).
    static PowerSeries variable(std::size_t order) {
        PowerSeries s(order);
        if (order >= 1) s.coeffs_[1] = Coeff(1);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Coeff& operator[](std::size_t k) const { return coeffs_.at(k); }
    Coeff& operator[](std::size_t k) { return coeffs_.at(k); }
    const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const {
        PowerSeries s(order);
        for (std::size_t k = 0; k <= std::min(order, this->order()); ++k) s.coeffs_[k] = coeffs_[k];
        return s;
    }

    PowerSeries& operator+=(const PowerSeries& rhs) {
        shrink_to(rhs.order());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + rhs.coeffs_[k];
        return *this;
    }
    PowerSeries& operator-=(const PowerSeries& rhs) {
        shrink_to(rhs.order());
        for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - rhs.coeffs_[k];
        return *this;
    }
    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t order = std::min(a.order(), b.order());
        PowerSeries out(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; i + j <= order; ++j) {
                if (is_zero(b.coeffs_[j])) continue;
                out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }
    PowerSeries& operator*=(const PowerSeries& rhs) { return *this = *this * rhs; }

    friend PowerSeries operator*(PowerSeries a, const Rational& s) {
        for (auto& c : a.coeffs_) c = c * s;
        return a;
    }

    /// Multiplies every coefficient by a ring element.
    PowerSeries scaled(const Coeff& c) const {
        PowerSeries out = *this;
        for (auto& x : out.coeffs_) x = x * c;
        return out;
    }

    /// z * S(z), keeping the order.
    PowerSeries shifted() const {
        PowerSeries out(order());
        for (std::size_t k = 0; k < order(); ++k) out.coeffs_[k + 1] = coeffs_[k];
        return out;
    }

    /// d/dz. The top coefficient is unknown after differentiation, so the
    /// order drops by one.
    PowerSeries derivative() const {
        if (order() == 0) return PowerSeries(0);
        PowerSeries out(order() - 1);
        for (std::size_t k = 1; k <= order(); ++k) out.coeffs_[k - 1] = coeffs_[k] * Rational(k);
        return out;
    }

    /// Pointing operator z d/dz; exact at the same order.
    PowerSeries pointed() const {
        PowerSeries out(order());
        for (std::size_t k = 1; k <= order(); ++k) out.coeffs_[k] = coeffs_[k] * Rational(k);
        return out;
    }

    /// 1/S. Requires an invertible constant term.
    PowerSeries inverse() const {
        auto inv0 = unit_inverse(coeffs_[0]);
        if (!inv0) throw SeriesError("series inverse needs an invertible constant term");
        PowerSeries out(order());
        out.coeffs_[0] = *inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            Coeff acc(0);
            for (std::size_t k = 1; k <= n; ++k) {
                if (is_zero(coeffs_[k])) continue;
                acc = acc + coeffs_[k] * out.coeffs_[n - k];
            }
            out.coeffs_[n] = (Coeff(0) - acc) * *inv0;
        }
        return out;
    }

    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) { return a * b.inverse(); }

    /// log(1/(1-S)) = sum_{k>=1} S^k / k. Requires S to have zero constant term,
    /// so the sum is finite at every order.
    PowerSeries log_one_over_one_minus() const {
        if (!is_zero(coeffs_[0])) {
            throw SeriesError("log(1/(1-S)) needs S with zero constant term");
        }
        PowerSeries out(order());
        PowerSeries power = *this;
        for (std::size_t k = 1; k <= order(); ++k) {
            out += power * Rational(1, k);
            power = power * *this;
        }
        return out;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    void shrink_to(std::size_t order) {
        if (order < this->order()) coeffs_.resize(order + 1);
    }

    std::vector<Coeff> coeffs_{Coeff(0)};
};

using RationalSeries = PowerSeries<Rational>;

}  // namespace sykspike
