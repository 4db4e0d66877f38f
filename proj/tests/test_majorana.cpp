#include "sykspike/error.hpp"
#include "sykspike/majorana.hpp"

#include <catch_amalgamated.hpp>

using namespace sykspike;
using namespace sykspike::ed;

TEST_CASE("Majorana operators satisfy the Clifford relations at N = 8") {
    const auto alg = build_majoranas(8);
    const int n = alg.qubits();
    const auto dim = static_cast<Eigen::Index>(alg.dim());
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    std::vector<Eigen::MatrixXcd> m;
    for (const auto& op : alg.operators()) m.push_back(op.to_dense(n));
    for (int a = 0; a < 8; ++a) {
        CHECK((m[a] - m[a].adjoint()).norm() < 1e-14);
        CHECK(std::abs(m[a].trace()) < 1e-14);
        for (int b = 0; b < 8; ++b) {
            const Eigen::MatrixXcd anti = m[a] * m[b] + m[b] * m[a];
            CHECK((anti - (a == b ? 2.0 : 0.0) * id).norm() < 1e-14);
        }
    }
}

TEST_CASE("Pauli string algebra matches dense matrices") {
    const auto alg = build_majoranas(10);
    const int n = alg.qubits();
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            const auto prod = alg[a] * alg[b];
            CHECK((prod.to_dense(n) - alg[a].to_dense(n) * alg[b].to_dense(n)).norm() < 1e-14);
            CHECK((prod.adjoint().to_dense(n) - prod.to_dense(n).adjoint()).norm() < 1e-14);
        }
    const std::vector<int> idx{0, 3, 4, 9};
    const auto p = alg.product(idx);
    Eigen::MatrixXcd dense = alg[0].to_dense(n);
    for (int i : {3, 4, 9}) dense = dense * alg[i].to_dense(n);
    CHECK((p.to_dense(n) - dense).norm() < 1e-14);
}

TEST_CASE("Pauli action on basis states") {
    const PauliString xz{0b01, 0b10, 1};
    const auto dense = xz.to_dense(2);
    for (std::uint32_t b = 0; b < 4; ++b)
        for (std::uint32_t r = 0; r < 4; ++r) {
            const std::complex<double> expected = (r == (b ^ xz.x)) ? xz.amplitude(b) : 0.0;
            CHECK(std::abs(dense(r, b) - expected) < 1e-15);
        }
    CHECK(PauliString::identity().phase_factor() == std::complex<double>(1.0, 0.0));
}

TEST_CASE("Hermitian Majorana products for even p") {
    // i^{p(p-1)/2} psi_1 ... psi_p is Hermitian.
    const auto alg = build_majoranas(8);
    const std::vector<int> idx{1, 2, 5, 6};
    auto op = alg.product(idx);
    op.phase = (op.phase + 4 * 3 / 2) % 4;
    const auto d = op.to_dense(alg.qubits());
    CHECK((d - d.adjoint()).norm() < 1e-14);
}

TEST_CASE("invalid fermion counts") {
    CHECK_THROWS_AS(build_majoranas(7), DomainError);
    CHECK_THROWS_AS(build_majoranas(6), DomainError);
    CHECK_THROWS_AS(build_majoranas(34), DomainError);
    CHECK(build_majoranas(32).qubits() == 16);
}
