#include "sykspike/ensemble.hpp"
#include "sykspike/ensemble_io.hpp"
#include "sykspike/error.hpp"
#include "sykspike/qcomb.hpp"
#include "sykspike/rng.hpp"
#include "sykspike/spectral.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

using namespace sykspike;
using namespace sykspike::ed;

namespace {

EnsembleSpec small_spec(double lambda1 = 3.0) {
    EnsembleSpec s;
    s.N = 18;
    s.p = 4;
    s.lambda1 = lambda1;
    s.sample_count = 6;
    s.master_seed = 2024;
    s.bins = 20;
    s.p_max = 6;
    return s;
}

}  // namespace

TEST_CASE("spec validation") {
    auto s = small_spec();
    CHECK_NOTHROW(s.validate());
    s.N = 13;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = small_spec();
    s.p_max = 13;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = small_spec();
    s.sample_count = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("parallel ensemble equals the serial reference") {
    const auto spec = small_spec();
    const auto par = run_ensemble(spec);
    const auto ser = run_ensemble_serial(spec);
    CHECK(par == ser);
    REQUIRE(par.samples.size() == 6);
    for (std::size_t i = 0; i < par.samples.size(); ++i) {
        CHECK(par.samples[i].index == i);
        CHECK(par.samples[i].seed == derive_seed(spec.master_seed, i));
        CHECK(par.samples[i].eigenvalues.size() == par.dim());
    }
}

TEST_CASE("thread count does not change the JSON bytes") {
    const auto spec = small_spec();
    const auto one = dump_ensemble_json(run_ensemble(spec, {KernelMode::Parallel, 1}));
    for (int threads : {2, 3, 4}) CHECK(dump_ensemble_json(run_ensemble(spec, {KernelMode::Parallel, threads})) == one);
}

TEST_CASE("histogram normalization and L1 distance") {
    const auto res = run_ensemble(small_spec(1.0));
    const auto h = histogram(res, 25);
    double mass = 0;
    for (double d : h.density) mass += d * h.width();
    CHECK(mass == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(h.outside == 0);
    CHECK(h.total == res.samples.size() * res.dim());

    const auto narrow = histogram(res, 20, -0.5, 0.5);
    double inside = 0;
    for (double d : narrow.density) inside += d * narrow.width();
    CHECK(inside == Catch::Approx(1.0 - double(narrow.outside) / narrow.total).epsilon(1e-12));

    // Against its own step function the distance vanishes; against zero it is the mass.
    const auto step = [&](double e) {
        const auto b = static_cast<std::size_t>(std::floor((e - h.lo) / h.width()));
        return b < h.density.size() ? h.density[b] : 0.0;
    };
    CHECK(l1_distance(h, step) < 1e-12);
    CHECK(l1_distance(h, [](double) { return 0.0; }) == Catch::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("empirical moments follow the trace definition") {
    const auto res = run_ensemble(small_spec(2.0));
    const double q = qcomb::qtilde(18, 4);
    const auto m = empirical_moments(res, 4, q);
    REQUIRE(m.size() == 4);
    // p = 1: dim * mean tr(H)/dim = lambda1 for every sample.
    CHECK(m[0].estimate == Catch::Approx(2.0).epsilon(1e-10));
    CHECK(m[0].standard_error < 1e-9);
    // p = 2 by hand.
    const double dim = double(res.dim());
    double acc = 0;
    for (const auto& s : res.samples) {
        double t = 0;
        for (double e : s.eigenvalues) t += e * e;
        acc += t / dim;
    }
    const double expect = dim * (acc / double(res.samples.size()) - qcomb::rt_value(1, q));
    CHECK(m[1].estimate == Catch::Approx(expect).epsilon(1e-9));
    CHECK(m[1].standard_error > 0.0);
}

TEST_CASE("split statistics") {
    const auto res = run_ensemble(small_spec(3.0));
    REQUIRE(res.split);
    const auto& s = *res.split;
    CHECK(s.threshold == Catch::Approx(res.edge * 1.05));
    CHECK(s.analytic == Catch::Approx(spectral::solve_secular({res.q_eff, 3.0})));
    CHECK(s.per_sample.size() == res.samples.size());
    std::size_t accepted = 0;
    for (std::size_t i = 0; i < res.samples.size(); ++i) {
        const auto& ev = res.samples[i].eigenvalues;
        const auto above = std::count_if(ev.begin(), ev.end(), [&](double e) { return e > s.threshold; });
        CHECK(s.per_sample[i].has_value() == (above == 1));
        if (above == 1) {
            CHECK(*s.per_sample[i] == ev.back());
            ++accepted;
        }
    }
    CHECK(accepted + s.flagged.size() == res.samples.size());
    CHECK_THROWS_AS(split_statistics(res, res.q_eff, 0.5), RegimeError);
    CHECK(!run_ensemble(small_spec(1.0)).split);
}

TEST_CASE("JSON and CSV round trips") {
    const auto res = run_ensemble(small_spec(3.0));
    const auto text = dump_ensemble_json(res);
    const auto back = parse_ensemble_json(text);
    CHECK(back == res);
    CHECK(dump_ensemble_json(back) == text);

    std::stringstream csv;
    csv << "# a comment\n";
    write_eigenvalue_csv(csv, res);
    const auto samples = read_eigenvalue_csv(csv);
    REQUIRE(samples.size() == res.samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) CHECK(samples[i].eigenvalues == res.samples[i].eigenvalues);

    CHECK_THROWS_AS(parse_ensemble_json("{}"), ConfigError);
    CHECK_THROWS_AS(parse_ensemble_json("not json"), ConfigError);
    std::stringstream bad("x,y\n");
    CHECK_THROWS_AS(read_eigenvalue_csv(bad), ConfigError);
}

TEST_CASE("format_double round trips") {
    for (double v : {0.1, 1.0 / 3.0, 3.33824460838, -2.140133737, 1e-300, 6.02214076e23}) {
        CHECK(std::stod(format_double(v)) == v);
    }
}

TEST_CASE("negative q_eff leaves the split statistics empty") {
    auto spec = small_spec(3.0);
    spec.N = 12;
    spec.sample_count = 2;
    const auto res = run_ensemble(spec);
    CHECK(res.q_eff < 0.0);
    CHECK(!res.split);
    CHECK(res.empirical_moments.size() == 6);
}
