#pragma once

#include "sykspike/exact.hpp"
#include "sykspike/qpolynomial.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace sykspike {

/// Sparse polynomial in (q, lambda1) with rational coefficients. Terms are
/// keyed by (lambda1 exponent, q exponent); zero terms are never stored.
class BivariatePoly {
public:
    using Exponents = std::pair<int, int>;  // (lambda1 degree, q degree)

    BivariatePoly() = default;
    BivariatePoly(long c);  // NOLINT(google-explicit-constructor): ring embedding
    BivariatePoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static BivariatePoly monomial(Rational c, int lambda_degree, int q_degree);
    static BivariatePoly lambda();
    static BivariatePoly q();
    /// Embeds a q-polynomial (no lambda1 dependence).
    static BivariatePoly from_q(const QPolynomial& p);

    const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    Rational coeff(int lambda_degree, int q_degree) const;

    BivariatePoly substitute_q(const Rational& q) const;
    double evaluate(double q, double lambda1) const;

    BivariatePoly& operator+=(const BivariatePoly& rhs);
    BivariatePoly& operator-=(const BivariatePoly& rhs);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(BivariatePoly a, const Rational& s);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.to_string(); }

private:
    void add_term(const Exponents& e, const Rational& c);

    std::map<Exponents, Rational> terms_;
};

inline bool is_zero(const BivariatePoly& p) { return p.is_zero(); }
std::optional<BivariatePoly> unit_inverse(const BivariatePoly& p);

}  // namespace sykspike
