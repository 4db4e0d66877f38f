#include "sykspike/qcomb.hpp"

#include "sykspike/error.hpp"
#include "sykspike/power_series.hpp"

#include <numeric>
#include <string>

namespace sykspike::qcomb {

int CompositionTerm::weight() const {
    int w = 0;
    for (std::size_t i = 0; i < multiplicity.size(); ++i) w += static_cast<int>(i + 1) * multiplicity[i];
    return w;
}

int CompositionTerm::parts() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0); }

namespace {

void partitions_rec(int remaining, int max_part, CompositionTerm& term,
                    const std::function<void(const CompositionTerm&)>& visit) {
    if (remaining == 0) {
        visit(term);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++term.multiplicity[part - 1];
        partitions_rec(remaining - part, part, term, visit);
        --term.multiplicity[part - 1];
    }
}

void compositions_rec(int remaining, std::vector<int>& parts,
                      const std::function<void(std::span<const int>)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        parts.push_back(part);
        compositions_rec(remaining - part, parts, visit);
        parts.pop_back();
    }
}

}  // namespace

void for_each_partition(int j, const std::function<void(const CompositionTerm&)>& visit) {
    if (j < 0) throw DomainError("partition of a negative integer");
    CompositionTerm term{std::vector<int>(j, 0)};
    partitions_rec(j, j, term, visit);
}

void for_each_composition(int j, const std::function<void(std::span<const int>)>& visit) {
    if (j < 0) throw DomainError("composition of a negative integer");
    std::vector<int> parts;
    compositions_rec(j, parts, visit);
}

QPolynomial rt_polynomial(int n) {
    if (n < 0) throw DomainError("rt_polynomial needs n >= 0");
    // open[k]: weighted count of prefixes ending with k open chords.
    std::vector<QPolynomial> open(n + 2);
    open[0] = QPolynomial{1};
    const int steps = 2 * n;
    for (int t = 0; t < steps; ++t) {
        const int max_open = std::min(t, steps - t);
        std::vector<QPolynomial> next(n + 2);
        for (int k = 0; k <= max_open && k <= n; ++k) {
            if (open[k].is_zero()) continue;
            if (k + 1 <= n && k + 1 <= steps - t - 1) next[k + 1] += open[k];
            if (k >= 1) next[k - 1] += open[k].times_q_integer(k);
        }
        open = std::move(next);
    }
    return open[0];
}

double rt_value(int n, double q) {
    if (n < 0) throw DomainError("rt_value needs n >= 0");
    std::vector<double> open(n + 2, 0.0), next(n + 2, 0.0);
    open[0] = 1.0;
    const int steps = 2 * n;
    for (int t = 0; t < steps; ++t) {
        std::fill(next.begin(), next.end(), 0.0);
        double qint = 0.0;  // [k]_q, built incrementally
        double qpow = 1.0;
        for (int k = 0; k <= n; ++k) {
            if (k >= 1) {
                qint += qpow;
                qpow *= q;
            }
            if (open[k] == 0.0) continue;
            if (k + 1 <= n && k + 1 <= steps - t - 1) next[k + 1] += open[k];
            if (k >= 1) next[k - 1] += open[k] * qint;
        }
        std::swap(open, next);
    }
    return open[0];
}

BigInt catalan(int n) {
    if (n < 0) throw DomainError("catalan needs n >= 0");
    return binomial(2 * n, n) / (n + 1);
}

std::vector<Rational> catalan_block(int count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.emplace_back(catalan(i));
    return out;
}

Rational necklace_count(int n, std::span<const Rational> block_coeffs) {
    if (n < 1) throw DomainError("necklace_count needs n >= 1");
    std::vector<Rational> b(block_coeffs.begin(), block_coeffs.end());
    if (b.size() < static_cast<std::size_t>(n)) {
        throw DomainError("necklace_count needs block coefficients b_0..b_" + std::to_string(n - 1));
    }
    b.resize(n + 1, Rational(0));
    const RationalSeries block(n, std::move(b));
    const RationalSeries cyc = block.shifted().log_one_over_one_minus();
    return cyc[n] * n;
}

Rational appendix_S(int p, int j) {
    if (p < 1) throw DomainError("appendix_S needs p >= 1");
    if (j < 0 || j > (p - 1) / 2) {
        throw DomainError("appendix_S needs 0 <= j <= floor((p-1)/2), got p=" + std::to_string(p) +
                          " j=" + std::to_string(j));
    }
    Rational r(binomial(p, j) * (p - 2 * j), BigInt(p));
    r.canonicalize();
    return r;
}

Rational appendix_S_bruteforce(int p, int j) {
    if (p < 1) throw DomainError("appendix_S_bruteforce needs p >= 1");
    if (j < 0 || 2 * j > p) throw DomainError("appendix_S_bruteforce needs 0 <= 2j <= p");
    if (j > kBruteforcePartitionLimit) {
        throw SizeLimitError("appendix_S_bruteforce capped at j=" + std::to_string(kBruteforcePartitionLimit));
    }
    std::vector<BigInt> cat(j + 1);
    for (int i = 0; i <= j; ++i) cat[i] = catalan(i);

    BigInt total = 0;
    for_each_partition(j, [&](const CompositionTerm& term) {
        const int r = term.parts();
        BigInt multinomial = factorial(r);
        BigInt product = 1;
        for (int i = 1; i <= j; ++i) {
            const int k = term.multiplicity[i - 1];
            if (k == 0) continue;
            multinomial /= factorial(k);
            BigInt power;
            mpz_pow_ui(power.get_mpz_t(), cat[i].get_mpz_t(), static_cast<unsigned long>(k));
            product *= power;
        }
        total += multinomial * binomial(p - 2 * j, r) * product;
    });
    return Rational(total);
}

Rational qtilde_exact(int N, int p) {
    if (N < 1 || p < 0) throw DomainError("qtilde needs N >= 1 and p >= 0");
    if (p > N) throw DomainError("qtilde needs p <= N, got p=" + std::to_string(p) + " N=" + std::to_string(N));
    BigInt sum = 0;
    for (int c = 0; c <= p; ++c) {
        BigInt term = binomial(p, c) * binomial(N - p, p - c);
        if (c % 2) sum -= term;
        else sum += term;
    }
    Rational r(sum, binomial(N, p));
    r.canonicalize();
    return r;
}

double qtilde(int N, int p) { return qtilde_exact(N, p).get_d(); }

}  // namespace sykspike::qcomb
