#include "sykspike/qpolynomial.hpp"

#include <algorithm>

namespace sykspike {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

QPolynomial QPolynomial::constant(const BigInt& c) { return QPolynomial(std::vector<BigInt>{c}); }

void QPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

BigInt QPolynomial::evaluate(const BigInt& q) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

double QPolynomial::evaluate(double q) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + it->get_d();
    return acc;
}

QPolynomial QPolynomial::times_q_integer(std::size_t k) const {
    if (k == 0 || coeffs_.empty()) return {};
    // Sliding-window sum: out[m] = sum_{i=m-k+1}^{m} in[i].
    std::vector<BigInt> out(coeffs_.size() + k - 1);
    BigInt window = 0;
    for (std::size_t m = 0; m < out.size(); ++m) {
        if (m < coeffs_.size()) window += coeffs_[m];
        if (m >= k) window -= coeffs_[m - k];
        out[m] = window;
    }
    return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (coeffs_.empty() || rhs.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string QPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        if (!s.empty()) s += sgn(coeffs_[k]) < 0 ? " - " : " + ";
        else if (sgn(coeffs_[k]) < 0) s += "-";
        BigInt mag = abs(coeffs_[k]);
        if (k == 0 || mag != 1) s += mag.get_str();
        if (k >= 1) s += (k == 1) ? "q" : "q^" + std::to_string(k);
    }
    return s;
}

}  // namespace sykspike
