#pragma once

#include "sykspike/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace sykspike {

/// Exact polynomial in the crossing weight q with big-integer coefficients.
/// Coefficient k multiplies q^k. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients.
class QPolynomial {
public:
    QPolynomial() = default;
    explicit QPolynomial(std::vector<BigInt> coeffs);
    QPolynomial(std::initializer_list<long> coeffs);

    static QPolynomial constant(const BigInt& c);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of q^k (zero beyond the degree).
    BigInt coeff(std::size_t k) const;
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    BigInt evaluate(const BigInt& q) const;
    double evaluate(double q) const;

    /// Multiplies by the q-integer [k]_q = 1 + q + ... + q^{k-1} in O(degree + k).
    QPolynomial times_q_integer(std::size_t k) const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QPolynomial& p) {
        return os << p.to_string();
    }

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

}  // namespace sykspike
