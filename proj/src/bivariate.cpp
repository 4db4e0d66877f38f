#include "sykspike/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sykspike {

BivariatePoly::BivariatePoly(long c) {
    if (c != 0) terms_.emplace(Exponents{0, 0}, Rational(c));
}

BivariatePoly::BivariatePoly(const Rational& c) { add_term({0, 0}, c); }

BivariatePoly BivariatePoly::monomial(Rational c, int lambda_degree, int q_degree) {
    BivariatePoly p;
    p.add_term({lambda_degree, q_degree}, c);
    return p;
}

BivariatePoly BivariatePoly::lambda() { return monomial(1, 1, 0); }
BivariatePoly BivariatePoly::q() { return monomial(1, 0, 1); }

BivariatePoly BivariatePoly::from_q(const QPolynomial& p) {
    BivariatePoly out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) out.add_term({0, static_cast<int>(k)}, Rational(p.coeffs()[k]));
    return out;
}

bool BivariatePoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational BivariatePoly::coeff(int lambda_degree, int q_degree) const {
    auto it = terms_.find({lambda_degree, q_degree});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Exponents& e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) {
        // Equality compares stored terms, so keep them in lowest form.
        it->second.canonicalize();
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::substitute_q(const Rational& q) const {
    BivariatePoly out;
    for (const auto& [e, c] : terms_) {
        Rational qp = 1;
        for (int i = 0; i < e.second; ++i) qp *= q;
        out.add_term({e.first, 0}, c * qp);
    }
    return out;
}

double BivariatePoly::evaluate(double q, double lambda1) const {
    double acc = 0.0;
    for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(lambda1, e.first) * std::pow(q, e.second);
    return acc;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        }
    }
    return out;
}

BivariatePoly operator*(BivariatePoly a, const Rational& s) {
    if (sgn(s) == 0) return {};
    Rational f = s;
    f.canonicalize();
    for (auto& [e, c] : a.terms_) c *= f;
    return a;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    // Highest lambda1 power first, ascending q within a lambda1 power.
    std::vector<std::pair<Exponents, Rational>> order(terms_.begin(), terms_.end());
    std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first.first != b.first.first ? a.first.first > b.first.first : a.first.second < b.first.second;
    });
    std::string s;
    for (const auto& [e, c] : order) {
        const bool neg = sgn(c) < 0;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        const Rational mag = abs(c);
        std::string factors;
        if (e.first > 0) factors += e.first == 1 ? "l" : "l^" + std::to_string(e.first);
        if (e.second > 0) {
            if (!factors.empty()) factors += "*";
            factors += e.second == 1 ? "q" : "q^" + std::to_string(e.second);
        }
        if (factors.empty()) s += mag.get_str();
        else if (mag == 1) s += factors;
        else s += mag.get_str() + "*" + factors;
    }
    return s;
}

std::optional<BivariatePoly> unit_inverse(const BivariatePoly& p) {
    if (!p.is_constant() || p.is_zero()) return std::nullopt;
    return BivariatePoly(Rational(1) / p.coeff(0, 0));
}

}  // namespace sykspike
