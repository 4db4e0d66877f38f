#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sykspike::ed {

/// The operator i^phase X^x Z^z on n qubits, where bit j of `x` (`z`) puts an
/// X (Z) on qubit j. Qubit j is bit j of the computational basis index.
struct PauliString {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    int phase = 0;  // mod 4

    static PauliString identity() { return {}; }

    friend PauliString operator*(const PauliString& a, const PauliString& b);
    PauliString adjoint() const;
    /// i^phase as a complex number.
    std::complex<double> phase_factor() const;
    /// Coefficient c with P|b> = c |b ^ x>.
    std::complex<double> amplitude(std::uint32_t basis_state) const;

    Eigen::MatrixXcd to_dense(int qubits) const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// N Majorana operators on N/2 qubits by Jordan-Wigner:
///   psi_{2k}   = Z_0 ... Z_{k-1} X_k
///   psi_{2k+1} = Z_0 ... Z_{k-1} Y_k
/// (0-based). Each squares to the identity and distinct ones anticommute.
class MajoranaAlgebra {
public:
    static constexpr int kMinN = 8;
    static constexpr int kMaxN = 32;

    explicit MajoranaAlgebra(int N);

    int N() const noexcept { return n_; }
    int qubits() const noexcept { return n_ / 2; }
    std::size_t dim() const noexcept { return std::size_t{1} << qubits(); }
    std::span<const PauliString> operators() const noexcept { return ops_; }
    const PauliString& operator[](int i) const { return ops_.at(i); }

    /// psi_{i_1} psi_{i_2} ... in the given order.
    PauliString product(std::span<const int> indices) const;

private:
    int n_;
    std::vector<PauliString> ops_;
};

/// Validates N and returns the algebra.
MajoranaAlgebra build_majoranas(int N);

}  // namespace sykspike::ed
