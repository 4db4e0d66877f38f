#pragma once

#include "sykspike/hamiltonian.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace sykspike::ed {

struct EnsembleSpec {
    int N = 24;
    int p = 4;
    double lambda1 = 3.0;
    int sample_count = 50;
    std::uint64_t master_seed = 1;
    int bins = 60;
    int p_max = 6;
    double split_margin = 0.05;  // threshold = edge * (1 + margin)

    void validate() const;
    friend bool operator==(const EnsembleSpec&, const EnsembleSpec&) = default;
};

struct RunOptions {
    KernelMode mode = KernelMode::Parallel;
    int threads = 0;  // 0: OpenMP default
};

struct SampleRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::vector<double> eigenvalues;  // ascending, dim entries

    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<double> density;  // per bin, normalized by total count
    std::size_t total = 0;
    std::size_t outside = 0;

    double width() const { return (hi - lo) / static_cast<double>(density.size()); }
    double center(std::size_t bin) const { return lo + (static_cast<double>(bin) + 0.5) * width(); }
    friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct MomentEstimate {
    int p = 0;
    double estimate = 0.0;
    double standard_error = 0.0;
    friend bool operator==(const MomentEstimate&, const MomentEstimate&) = default;
};

struct SplitStatistics {
    double threshold = 0.0;
    double analytic = 0.0;
    double mean = 0.0;
    double sigma_split = 0.0;  // RMS deviation from the analytic value
    std::vector<std::optional<double>> per_sample;  // empty when flagged
    std::vector<std::size_t> flagged;               // zero or >= 2 eigenvalues above threshold
    friend bool operator==(const SplitStatistics&, const SplitStatistics&) = default;
};

struct EnsembleResult {
    EnsembleSpec spec;
    double q_eff = 0.0;
    double edge = 0.0;
    std::vector<SampleRecord> samples;
    Histogram histogram;
    std::vector<MomentEstimate> empirical_moments;
    std::optional<SplitStatistics> split;

    std::size_t dim() const { return std::size_t{1} << (spec.N / 2); }
    friend bool operator==(const EnsembleResult&, const EnsembleResult&) = default;
};

/// Draws and diagonalizes every sample, then fills the statistics. Samples
/// run in parallel under KernelMode::Parallel; aggregation is in sample-index
/// order, so the result does not depend on the thread count.
EnsembleResult run_ensemble(const EnsembleSpec& spec, const RunOptions& opts = {});
EnsembleResult run_ensemble_serial(const EnsembleSpec& spec);

/// Computes q_eff, edge, histogram, moments and (when q_eff >= 0 and the
/// coupling is supercritical) split statistics from the eigenvalues already
/// present in `result`.
void summarize(EnsembleResult& result);

/// Split eigenvalue per sample and sigma about the analytic secular root.
/// Throws RegimeError unless lambda1 > lambda_critical(q_eff).
SplitStatistics split_statistics(const EnsembleResult& result, double q_eff, double lambda1,
                                 double margin = 0.05);

/// m_p = dim * (mean_samples (1/dim) sum_i E_i^p - RT(p/2, q_eff)) for even p,
/// without the subtraction for odd p.
std::vector<MomentEstimate> empirical_moments(const EnsembleResult& result, int p_max, double q_eff);

/// Pools all eigenvalues of all samples; density integrates to the in-range fraction.
Histogram histogram(const EnsembleResult& result, int bins, double lo, double hi);
/// Range spanning every eigenvalue, so the density integrates to one.
Histogram histogram(const EnsembleResult& result, int bins);

/// Integral of |hist(E) - rho(E)| over [hist.lo, hist.hi] by composite
/// Gauss-Legendre quadrature on each bin.
double l1_distance(const Histogram& hist, const std::function<double(double)>& rho);

}  // namespace sykspike::ed
