#include "sykspike/hamiltonian.hpp"

#include "sykspike/error.hpp"
#include "sykspike/exact.hpp"
#include "sykspike/rng.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace sykspike::ed {

namespace {

void check_model(int N, int p) {
    if (p < 2 || p % 2 != 0) throw DomainError("interaction order p must be even and >= 2, got " + std::to_string(p));
    if (p > N) throw DomainError("interaction order p exceeds N");
}

inline std::uint32_t state_of(std::uint32_t index, int sector) {
    return (index << 1) | ((std::popcount(index) + sector) & 1u);
}

// Column `col` of a parity block: every term maps state(col) to state(col) ^ x,
// which stays in the same sector.
inline void fill_column(Eigen::MatrixXcd& block, const std::vector<HamiltonianTerm>& terms, std::uint32_t col,
                        int sector) {
    const std::uint32_t b = state_of(col, sector);
    std::complex<double>* column = block.col(col).data();
    for (const auto& t : terms) {
        const double sign = (std::popcount(t.z & b) & 1) ? -1.0 : 1.0;
        column[(b ^ t.x) >> 1] += sign * t.coefficient;
    }
}

std::vector<double> block_eigenvalues(const Eigen::MatrixXcd& block) {
    if (static_cast<std::size_t>(block.rows()) > kMaxBlockDim) {
        throw SizeLimitError("dense eigensolve limited to blocks of size " + std::to_string(kMaxBlockDim));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(block, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace

double coupling_scale(int N, int p) { return 1.0 / std::sqrt(binomial(N, p).get_d()); }

std::vector<std::uint32_t> index_subsets(int N, int p) {
    check_model(N, p);
    std::vector<std::uint32_t> out;
    out.reserve(binomial(N, p).get_ui());
    std::vector<int> idx(p);
    for (int i = 0; i < p; ++i) idx[i] = i;
    while (true) {
        std::uint32_t mask = 0;
        for (int i : idx) mask |= 1u << i;
        out.push_back(mask);
        int k = p - 1;
        while (k >= 0 && idx[k] == N - p + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int i = k + 1; i < p; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<Coupling> draw_couplings(int N, int p, std::uint64_t seed) {
    const auto subsets = index_subsets(N, p);
    const double scale = coupling_scale(N, p);
    GaussianSampler gauss(seed);
    std::vector<Coupling> out;
    out.reserve(subsets.size());
    for (std::uint32_t s : subsets) out.push_back({s, scale * gauss()});
    return out;
}

std::vector<HamiltonianTerm> hamiltonian_terms(const MajoranaAlgebra& algebra, int p,
                                               const std::vector<Coupling>& couplings) {
    // i^{p(p-1)/2} keeps each Psi_alpha term Hermitian.
    const PauliString hermitian_phase{0, 0, (p * (p - 1) / 2) & 3};
    std::vector<HamiltonianTerm> terms;
    terms.reserve(couplings.size());
    std::vector<int> indices;
    for (const auto& c : couplings) {
        indices.clear();
        for (std::uint32_t m = c.subset; m; m &= m - 1) indices.push_back(std::countr_zero(m));
        const PauliString op = hermitian_phase * algebra.product(indices);
        terms.push_back({op.x, op.z, c.value * op.phase_factor()});
    }
    return terms;
}

Eigen::MatrixXcd assemble_block(const std::vector<HamiltonianTerm>& terms, int qubits, int sector,
                                KernelMode mode) {
    const auto half = static_cast<std::uint32_t>(1u << (qubits - 1));
    Eigen::MatrixXcd block = Eigen::MatrixXcd::Zero(half, half);
    if (mode == KernelMode::Serial) {
        for (std::uint32_t col = 0; col < half; ++col) fill_column(block, terms, col, sector);
    } else {
        const auto n = static_cast<std::int64_t>(half);
#pragma omp parallel for schedule(static)
        for (std::int64_t col = 0; col < n; ++col) fill_column(block, terms, static_cast<std::uint32_t>(col), sector);
    }
    return block;
}

HamiltonianSample sample_hamiltonian(const MajoranaAlgebra& algebra, int p, double lambda1, std::uint64_t seed,
                                     KernelMode mode) {
    check_model(algebra.N(), p);
    HamiltonianSample s;
    s.N = algebra.N();
    s.p = p;
    s.lambda1 = lambda1;
    s.seed = seed;
    s.couplings = draw_couplings(s.N, p, seed);
    const auto terms = hamiltonian_terms(algebra, p, s.couplings);
    for (int sector = 0; sector < 2; ++sector) s.blocks[sector] = assemble_block(terms, algebra.qubits(), sector, mode);
    s.blocks[0](0, 0) += lambda1;
    return s;
}

HamiltonianSample sample_hamiltonian(int N, int p, double lambda1, std::uint64_t seed, KernelMode mode) {
    return sample_hamiltonian(MajoranaAlgebra(N), p, lambda1, seed, mode);
}

Eigen::MatrixXcd HamiltonianSample::dense() const {
    const auto d = static_cast<std::uint32_t>(dim());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int sector = 0; sector < 2; ++sector) {
        const auto& block = blocks[sector];
        for (std::uint32_t c = 0; c < d / 2; ++c)
            for (std::uint32_t r = 0; r < d / 2; ++r) m(state_of(r, sector), state_of(c, sector)) = block(r, c);
    }
    return m;
}

std::vector<double> eigenvalues(const HamiltonianSample& sample) {
    auto even = block_eigenvalues(sample.blocks[0]);
    auto odd = block_eigenvalues(sample.blocks[1]);
    std::vector<double> out(even.size() + odd.size());
    std::merge(even.begin(), even.end(), odd.begin(), odd.end(), out.begin());
    return out;
}

std::vector<double> eigenvalues_dense_reference(const HamiltonianSample& sample) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sample.dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

}  // namespace sykspike::ed
