#include "sykspike/ensemble.hpp"

#include "sykspike/error.hpp"
#include "sykspike/qcomb.hpp"
#include "sykspike/rng.hpp"
#include "sykspike/spectral.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <fmt/format.h>
#include <omp.h>

#include <algorithm>
#include <cmath>

namespace sykspike::ed {

void EnsembleSpec::validate() const {
    if (N % 2 != 0 || N < MajoranaAlgebra::kMinN || N > MajoranaAlgebra::kMaxN) {
        throw DomainError(fmt::format("N must be even and in [{}, {}], got {}", MajoranaAlgebra::kMinN,
                                      MajoranaAlgebra::kMaxN, N));
    }
    if (p < 2 || p % 2 != 0 || p > N) throw DomainError(fmt::format("p must be even with 2 <= p <= N, got {}", p));
    if (!(lambda1 >= 0.0)) throw DomainError("lambda1 must be >= 0");
    if (sample_count < 1) throw DomainError("sample_count must be >= 1");
    if (bins < 10) throw DomainError("histogram needs at least 10 bins");
    if (p_max < 1 || p_max > 12) throw DomainError("empirical moments need 1 <= p_max <= 12");
    if (!(split_margin >= 0.0)) throw DomainError("split margin must be >= 0");
}

namespace {

SampleRecord run_sample(const MajoranaAlgebra& algebra, const EnsembleSpec& spec, std::size_t index,
                        KernelMode assembly) {
    SampleRecord rec;
    rec.index = index;
    rec.seed = derive_seed(spec.master_seed, index);
    const auto h = sample_hamiltonian(algebra, spec.p, spec.lambda1, rec.seed, assembly);
    rec.eigenvalues = eigenvalues(h);
    return rec;
}

}  // namespace

EnsembleResult run_ensemble(const EnsembleSpec& spec, const RunOptions& opts) {
    spec.validate();
    const MajoranaAlgebra algebra(spec.N);
    EnsembleResult result;
    result.spec = spec;
    result.samples.resize(spec.sample_count);
    if (opts.mode == KernelMode::Serial) {
        for (int i = 0; i < spec.sample_count; ++i) result.samples[i] = run_sample(algebra, spec, i, KernelMode::Serial);
    } else {
        const int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
        // Per-sample work stays on one thread; the assembly kernel inside
        // runs its loop serially when nested.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int i = 0; i < spec.sample_count; ++i) {
            result.samples[i] = run_sample(algebra, spec, i, KernelMode::Parallel);
        }
    }
    summarize(result);
    return result;
}

EnsembleResult run_ensemble_serial(const EnsembleSpec& spec) {
    return run_ensemble(spec, RunOptions{KernelMode::Serial, 1});
}

void summarize(EnsembleResult& result) {
    const auto& spec = result.spec;
    result.q_eff = qcomb::qtilde(spec.N, spec.p);
    // Same as spectral::spectral_edge, which also holds for q_eff < 0.
    result.edge = 2.0 / std::sqrt(1.0 - result.q_eff);
    result.histogram = histogram(result, spec.bins);
    result.empirical_moments = empirical_moments(result, spec.p_max, result.q_eff);
    result.split.reset();
    // Small N can give q_eff < 0, outside the domain of the analytic side.
    if (result.q_eff >= 0.0 && spec.lambda1 > spectral::lambda_critical(result.q_eff)) {
        result.split = split_statistics(result, result.q_eff, spec.lambda1, spec.split_margin);
    }
}

SplitStatistics split_statistics(const EnsembleResult& result, double q_eff, double lambda1, double margin) {
    const spectral::DeformationParams params{q_eff, lambda1};
    params.validate();
    const double lc = spectral::lambda_critical(q_eff);
    if (!(lambda1 > lc)) {
        throw RegimeError(fmt::format("split statistics need lambda1 > lambda_critical = {}, got {}", lc, lambda1));
    }
    SplitStatistics st;
    st.threshold = spectral::spectral_edge(q_eff) * (1.0 + margin);
    st.analytic = spectral::solve_secular(params);
    double sum = 0.0;
    double sq = 0.0;
    std::size_t accepted = 0;
    for (const auto& s : result.samples) {
        const auto first_above = std::upper_bound(s.eigenvalues.begin(), s.eigenvalues.end(), st.threshold);
        const auto count = std::distance(first_above, s.eigenvalues.end());
        if (count == 1) {
            const double e = *first_above;
            st.per_sample.emplace_back(e);
            sum += e;
            sq += (e - st.analytic) * (e - st.analytic);
            ++accepted;
        } else {
            st.per_sample.emplace_back(std::nullopt);
            st.flagged.push_back(s.index);
        }
    }
    if (accepted > 0) {
        st.mean = sum / static_cast<double>(accepted);
        st.sigma_split = std::sqrt(sq / static_cast<double>(accepted));
    } else {
        st.mean = std::nan("");
        st.sigma_split = std::nan("");
    }
    return st;
}

std::vector<MomentEstimate> empirical_moments(const EnsembleResult& result, int p_max, double q_eff) {
    if (p_max < 1 || p_max > 12) throw DomainError("empirical moments need 1 <= p_max <= 12");
    const double dim = static_cast<double>(result.dim());
    const std::size_t n = result.samples.size();
    // per_sample[p-1][s] = (1/dim) sum_i E_i^p for sample s
    std::vector<std::vector<double>> per_sample(p_max, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<double> sums(p_max, 0.0);
        for (double e : result.samples[s].eigenvalues) {
            double pw = 1.0;
            for (int p = 1; p <= p_max; ++p) {
                pw *= e;
                sums[p - 1] += pw;
            }
        }
        for (int p = 1; p <= p_max; ++p) per_sample[p - 1][s] = sums[p - 1] / dim;
    }
    std::vector<MomentEstimate> out;
    for (int p = 1; p <= p_max; ++p) {
        const auto& v = per_sample[p - 1];
        double mean = 0.0;
        for (double x : v) mean += x;
        mean /= static_cast<double>(n);
        double var = 0.0;
        for (double x : v) var += (x - mean) * (x - mean);
        const double se = n > 1 ? std::sqrt(var / static_cast<double>(n - 1) / static_cast<double>(n)) : 0.0;
        const double subtrahend = (p % 2 == 0) ? qcomb::rt_value(p / 2, q_eff) : 0.0;
        out.push_back({p, dim * (mean - subtrahend), dim * se});
    }
    return out;
}

Histogram histogram(const EnsembleResult& result, int bins, double lo, double hi) {
    if (bins < 10) throw DomainError("histogram needs at least 10 bins");
    if (!(hi > lo)) throw DomainError("histogram range must be non-empty");
    Histogram h;
    h.lo = lo;
    h.hi = hi;
    std::vector<std::size_t> counts(bins, 0);
    const double width = (hi - lo) / bins;
    for (const auto& s : result.samples) {
        for (double e : s.eigenvalues) {
            ++h.total;
            if (e < lo || e > hi) {
                ++h.outside;
                continue;
            }
            auto bin = static_cast<std::size_t>((e - lo) / width);
            counts[std::min<std::size_t>(bin, bins - 1)] += 1;
        }
    }
    h.density.resize(bins);
    for (int b = 0; b < bins; ++b) h.density[b] = h.total ? counts[b] / (static_cast<double>(h.total) * width) : 0.0;
    return h;
}

Histogram histogram(const EnsembleResult& result, int bins) {
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const auto& s : result.samples) {
        if (s.eigenvalues.empty()) continue;
        lo = std::min(lo, s.eigenvalues.front());
        hi = std::max(hi, s.eigenvalues.back());
    }
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    return histogram(result, bins, lo, hi);
}

double l1_distance(const Histogram& hist, const std::function<double(double)>& rho) {
    const double w = hist.width();
    constexpr int kSubdivisions = 16;
    double total = 0.0;
    for (std::size_t b = 0; b < hist.density.size(); ++b) {
        const double h = hist.density[b];
        const double a = hist.lo + static_cast<double>(b) * w;
        for (int k = 0; k < kSubdivisions; ++k) {
            const double x0 = a + w * k / kSubdivisions;
            const double x1 = a + w * (k + 1) / kSubdivisions;
            total += boost::math::quadrature::gauss<double, 7>::integrate(
                [&](double e) { return std::abs(h - rho(e)); }, x0, x1);
        }
    }
    return total;
}

}  // namespace sykspike::ed
