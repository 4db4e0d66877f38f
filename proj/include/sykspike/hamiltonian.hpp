#pragma once

#include "sykspike/majorana.hpp"

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace sykspike::ed {

/// Which implementation of a data-parallel kernel to run. Both produce
/// bit-identical output; Serial is the reference used by the tests.
enum class KernelMode { Serial, Parallel };

struct Coupling {
    std::uint32_t subset = 0;  // bit i set <=> Majorana i participates
    double value = 0.0;
};

/// A Pauli term c X^x Z^z of the assembled Hamiltonian.
struct HamiltonianTerm {
    std::uint32_t x = 0;
    std::uint32_t z = 0;
    std::complex<double> coefficient;
};

/// One draw of H = i^{p(p-1)/2} sum_alpha J_alpha Psi_alpha + lambda1 |0><0|.
///
/// Every term has an even number of X factors when p is even, so H commutes
/// with the parity prod_j Z_j, and |0> is a parity eigenstate. H is therefore
/// stored as its two parity blocks (even, odd), each of size dim/2. Basis
/// state b sits in block popcount(b) mod 2 at position b >> 1.
struct HamiltonianSample {
    int N = 0;
    int p = 0;
    double lambda1 = 0.0;
    std::uint64_t seed = 0;
    std::vector<Coupling> couplings;  // lexicographic order of subsets
    std::array<Eigen::MatrixXcd, 2> blocks;

    std::size_t dim() const noexcept { return std::size_t{1} << (N / 2); }
    /// Full dim x dim matrix in the computational basis.
    Eigen::MatrixXcd dense() const;
};

/// Standard deviation of each coupling, binom(N, p)^{-1/2}.
double coupling_scale(int N, int p);

/// All p-subsets of {0..N-1} as bitmasks, in lexicographic order.
std::vector<std::uint32_t> index_subsets(int N, int p);

/// Gaussian couplings for one sample, drawn in lexicographic subset order.
std::vector<Coupling> draw_couplings(int N, int p, std::uint64_t seed);

std::vector<HamiltonianTerm> hamiltonian_terms(const MajoranaAlgebra& algebra, int p,
                                               const std::vector<Coupling>& couplings);

/// Dense parity block (sector 0 even, 1 odd) of the coupling part.
Eigen::MatrixXcd assemble_block(const std::vector<HamiltonianTerm>& terms, int qubits, int sector,
                                KernelMode mode);

HamiltonianSample sample_hamiltonian(const MajoranaAlgebra& algebra, int p, double lambda1, std::uint64_t seed,
                                     KernelMode mode = KernelMode::Parallel);
HamiltonianSample sample_hamiltonian(int N, int p, double lambda1, std::uint64_t seed,
                                     KernelMode mode = KernelMode::Parallel);

/// Largest block size accepted by the dense eigensolver.
inline constexpr std::size_t kMaxBlockDim = std::size_t{1} << 13;

/// All dim eigenvalues in ascending order, from the two parity blocks.
std::vector<double> eigenvalues(const HamiltonianSample& sample);

/// Eigenvalues of sample.dense() without using the block structure.
std::vector<double> eigenvalues_dense_reference(const HamiltonianSample& sample);

}  // namespace sykspike::ed
