#pragma once

// Exact combinatorics of chord diagrams: Riordan-Touchard polynomials,
// Catalan numbers, pointed-cycle (necklace) counts, the closed form for the
// q=0 moment coefficients and the finite-p crossing weight.

#include "sykspike/chord_diagrams.hpp"
#include "sykspike/exact.hpp"
#include "sykspike/qpolynomial.hpp"

#include <functional>
#include <span>
#include <vector>

namespace sykspike::qcomb {

/// Multiplicities k_1..k_j of a partition of j, i.e. sum_i i*k_i = j.
/// `multiplicity[i-1]` is k_i.
struct CompositionTerm {
    std::vector<int> multiplicity;

    int weight() const;  // sum_i i*k_i
    int parts() const;   // sum_i k_i
};

/// Calls `visit` once per multiplicity vector with sum_i i*k_i = j, in
/// reverse-lexicographic order of the partition. j = 0 yields one empty term.
void for_each_partition(int j, const std::function<void(const CompositionTerm&)>& visit);

/// Calls `visit` once per ordered composition of j into positive parts.
void for_each_composition(int j, const std::function<void(std::span<const int>)>& visit);

/// RT(n, q): chord diagrams on 2n points counted by crossings. Computed by a
/// left-to-right sweep over open chords; closing one of k open chords adds
/// between 0 and k-1 crossings, i.e. a factor [k]_q.
QPolynomial rt_polynomial(int n);

/// RT(n, q) evaluated in floating point with the same sweep; usable far
/// beyond the sizes where the exact polynomial is practical.
double rt_value(int n, double q);

BigInt catalan(int n);

/// n [z^n] log(1/(1 - z B(z))) for a building block with coefficients
/// b_0..b_{n-1} (extra coefficients are ignored). Counts pointed labeled
/// cycles whose beads each carry a B-structure.
Rational necklace_count(int n, std::span<const Rational> block_coeffs);

/// Catalan numbers C_0..C_{count-1} as rationals (the binary-tree block).
std::vector<Rational> catalan_block(int count);

/// ((p - 2j)/p) binom(p, j), valid for 0 <= j <= floor((p-1)/2).
Rational appendix_S(int p, int j);

inline constexpr int kBruteforcePartitionLimit = 12;

/// Direct evaluation of
///   sum over k with sum_i i*k_i = j of
///   multinomial(r; k_1..k_j) binom(p-2j, r) prod_i C_i^{k_i},  r = sum_i k_i.
Rational appendix_S_bruteforce(int p, int j);

/// Finite-p crossing weight binom(N,p)^{-1} sum_c (-1)^c binom(p,c) binom(N-p,p-c).
Rational qtilde_exact(int N, int p);
double qtilde(int N, int p);

}  // namespace sykspike::qcomb
