#include "sykspike/majorana.hpp"

#include "sykspike/error.hpp"

#include <bit>
#include <string>

namespace sykspike::ed {

namespace {

constexpr std::complex<double> kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

PauliString operator*(const PauliString& a, const PauliString& b) {
    // Z^{z_a} X^{x_b} = (-1)^{|z_a & x_b|} X^{x_b} Z^{z_a}.
    const int swaps = std::popcount(a.z & b.x);
    return {a.x ^ b.x, a.z ^ b.z, (a.phase + b.phase + 2 * swaps) & 3};
}

PauliString PauliString::adjoint() const {
    // (X^x Z^z)^dagger = Z^z X^x = (-1)^{|x & z|} X^x Z^z.
    const int swaps = std::popcount(x & z);
    return {x, z, (-phase + 2 * swaps) & 3};
}

std::complex<double> PauliString::phase_factor() const { return kPhases[phase & 3]; }

std::complex<double> PauliString::amplitude(std::uint32_t basis_state) const {
    const int sign_flips = std::popcount(z & basis_state);
    return kPhases[(phase + 2 * sign_flips) & 3];
}

Eigen::MatrixXcd PauliString::to_dense(int qubits) const {
    const std::uint32_t dim = 1u << qubits;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (std::uint32_t b = 0; b < dim; ++b) m(b ^ x, b) = amplitude(b);
    return m;
}

MajoranaAlgebra::MajoranaAlgebra(int N) : n_(N) {
    if (N % 2 != 0 || N < kMinN || N > kMaxN) {
        throw DomainError("Majorana count must be even and in [" + std::to_string(kMinN) + ", " +
                          std::to_string(kMaxN) + "], got " + std::to_string(N));
    }
    ops_.reserve(N);
    for (int k = 0; k < N / 2; ++k) {
        const std::uint32_t bit = 1u << k;
        const std::uint32_t string = bit - 1u;
        ops_.push_back({bit, string, 0});
        // Y = i X Z
        ops_.push_back({bit, string | bit, 1});
    }
}

PauliString MajoranaAlgebra::product(std::span<const int> indices) const {
    PauliString out = PauliString::identity();
    for (int i : indices) out = out * ops_.at(i);
    return out;
}

MajoranaAlgebra build_majoranas(int N) { return MajoranaAlgebra(N); }

}  // namespace sykspike::ed
