#include "sykspike/cli/commands.hpp"

#include "sykspike/ensemble_io.hpp"
#include "sykspike/error.hpp"
#include "sykspike/genfunc.hpp"
#include "sykspike/qcomb.hpp"
#include "sykspike/spectral.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace sykspike::cli {

namespace {

using Config = std::vector<std::pair<std::string, std::string>>;

std::string num(double v) { return ed::format_double(v); }

Cell opt_cell(const std::optional<double>& v) {
    if (v) return *v;
    return std::monostate{};
}

int single_N(const RunConfig& cfg) {
    if (cfg.N.size() != 1) throw ConfigError(cfg.command + " needs exactly one --N");
    return cfg.N.front();
}

double require_lambda1(const RunConfig& cfg) {
    if (!cfg.lambda1) throw ConfigError(cfg.command + " needs --lambda1");
    return *cfg.lambda1;
}

void check_N(int N, bool large) {
    if (N % 2 != 0 || N < 8) throw ConfigError(fmt::format("N must be even and >= 8, got {}", N));
    const int cap = large ? kLargeMaxN : kDeskMaxN;
    if (N > cap) {
        throw ConfigError(large ? fmt::format("N={} exceeds the hard limit {}", N, kLargeMaxN)
                                : fmt::format("N={} exceeds the desk-scale limit {}; pass --large", N, kDeskMaxN));
    }
}

/// Model parameters shared by most commands: q (resolved) plus N and p when q came from them.
void add_model_config(Config& c, const RunConfig& cfg, double q) {
    if (!cfg.N.empty()) {
        c.emplace_back("N", std::to_string(single_N(cfg)));
        c.emplace_back("p", std::to_string(cfg.p));
    }
    c.emplace_back("q", num(q));
    if (cfg.lambda1) c.emplace_back("lambda1", num(*cfg.lambda1));
}

void add_ensemble_config(Config& c, const RunConfig& cfg) {
    c.emplace_back("samples", std::to_string(cfg.samples));
    c.emplace_back("seed", std::to_string(cfg.seed));
    c.emplace_back("bins", std::to_string(cfg.bins));
}

ed::EnsembleSpec ensemble_spec(const RunConfig& cfg, int N, double lambda1, int p_max) {
    ed::EnsembleSpec spec;
    spec.N = N;
    spec.p = cfg.p;
    spec.lambda1 = lambda1;
    spec.sample_count = cfg.samples;
    spec.master_seed = cfg.seed;
    spec.bins = cfg.bins;
    spec.p_max = p_max;
    spec.validate();
    return spec;
}

ed::RunOptions run_options(const RunConfig& cfg) { return {ed::KernelMode::Parallel, cfg.threads}; }

}  // namespace

void RunConfig::validate() const {
    if (p < 2 || p % 2 != 0) throw ConfigError(fmt::format("--p must be even and >= 2, got {}", p));
    if (lambda1 && !(*lambda1 > 0.0)) throw ConfigError("--lambda1 must be > 0");
    if (q && !(*q >= 0.0 && *q < 1.0)) throw ConfigError("--q must lie in [0, 1)");
    if (order < 1 || order > 60) throw ConfigError("--order must lie in [1, 60]");
    if (samples < 1) throw ConfigError("--samples must be >= 1");
    if (bins < 10) throw ConfigError("--bins must be >= 10");
    if (grid < 2) throw ConfigError("--grid must be >= 2");
    if (threads < 0) throw ConfigError("--threads must be >= 0");
    for (int n : N) check_N(n, large);
    for (int n : N)
        if (p > n) throw ConfigError(fmt::format("--p={} exceeds N={}", p, n));
}

double resolve_q(const RunConfig& cfg) {
    if (cfg.q && !cfg.N.empty()) throw ConfigError("--q and --N are mutually exclusive (N fixes q = qtilde(N, p))");
    if (cfg.q) return *cfg.q;
    if (cfg.N.empty()) throw ConfigError(cfg.command + " needs --q or --N");
    return qcomb::qtilde(single_N(cfg), cfg.p);
}

Table cmd_moments(const RunConfig& cfg) {
    const double lambda1 = require_lambda1(cfg);
    const double q = resolve_q(cfg);
    if (cfg.pmax < 1 || cfg.pmax > 30) throw ConfigError("--pmax must lie in [1, 30]");
    if (cfg.ensemble && cfg.pmax > 12) throw ConfigError("--pmax must be <= 12 with --ensemble");
    if (cfg.ensemble && cfg.N.empty()) throw ConfigError("--ensemble needs --N");

    Table t;
    t.command = "moments";
    add_model_config(t.config, cfg, q);
    t.config.emplace_back("pmax", std::to_string(cfg.pmax));
    t.config.emplace_back("order", std::to_string(cfg.order));
    t.config.emplace_back("ensemble", cfg.ensemble ? "true" : "false");
    if (cfg.ensemble) add_ensemble_config(t.config, cfg);
    t.columns = {"p", "exact", "gf", "asymptotic", "empirical", "stderr"};

    // Independent evaluation through the generating function, up to --order.
    const auto gf = genfunc::moments_gf(static_cast<std::size_t>(cfg.order));
    const auto report = spectral::classify_regime({q, lambda1});
    std::optional<ed::EnsembleResult> ens;
    if (cfg.ensemble) ens = ed::run_ensemble(ensemble_spec(cfg, single_N(cfg), lambda1, cfg.pmax), run_options(cfg));

    for (int p = 1; p <= cfg.pmax; ++p) {
        std::vector<Cell> row{std::int64_t{p}, genfunc::moments_closed(p).evaluate(q, lambda1)};
        if (p <= cfg.order) row.emplace_back(gf[p].evaluate(q, lambda1));
        else row.emplace_back(std::monostate{});
        if (report.e_split && *report.e_split > lambda1) {
            row.emplace_back(genfunc::moments_asymptotic(p, lambda1, *report.e_split));
        } else {
            row.emplace_back(std::monostate{});
        }
        if (ens) {
            const auto& m = ens->empirical_moments.at(p - 1);
            row.emplace_back(m.estimate);
            row.emplace_back(m.standard_error);
        } else {
            row.emplace_back(std::monostate{});
            row.emplace_back(std::monostate{});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table cmd_regime(const RunConfig& cfg) {
    const double lambda1 = require_lambda1(cfg);
    const double q = resolve_q(cfg);
    const auto r = spectral::classify_regime({q, lambda1});
    Table t;
    t.command = "regime";
    add_model_config(t.config, cfg, q);
    t.columns = {"q", "lambda1", "regime", "lambda_critical", "rho_C", "alpha_exponent", "tau_g", "rho_g", "e_split"};
    t.rows.push_back({q, lambda1, spectral::to_string(r.regime), r.lambda_critical, r.rho_C, r.alpha_exponent, r.tau_g,
                      r.rho_g, opt_cell(r.e_split)});
    return t;
}

Table cmd_split(const RunConfig& cfg) {
    const double lambda1 = require_lambda1(cfg);
    const double q = resolve_q(cfg);
    const spectral::DeformationParams params{q, lambda1};
    const double e = spectral::solve_secular(params);
    Table t;
    t.command = "split";
    add_model_config(t.config, cfg, q);
    t.columns = {"q", "lambda1", "e_split", "residual", "edge"};
    t.rows.push_back({q, lambda1, e, spectral::secular_residual(e, params), spectral::spectral_edge(q)});
    return t;
}

Table cmd_density(const RunConfig& cfg) {
    const double q = resolve_q(cfg);
    if (cfg.ensemble && (cfg.N.empty() || !cfg.lambda1)) throw ConfigError("--ensemble needs --N and --lambda1");

    Table t;
    t.command = "density";
    add_model_config(t.config, cfg, q);
    t.config.emplace_back("grid", std::to_string(cfg.grid));
    t.config.emplace_back("ensemble", cfg.ensemble ? "true" : "false");
    if (cfg.ensemble) add_ensemble_config(t.config, cfg);
    t.columns = {"kind", "E", "value"};

    const spectral::QHermiteDensity rho(q);
    const double edge = rho.support_edge();
    for (int i = 0; i < cfg.grid; ++i) {
        const double e = -edge + 2.0 * edge * i / (cfg.grid - 1);
        t.rows.push_back({std::string("curve"), e, rho(e)});
    }
    if (cfg.lambda1) {
        const auto report = spectral::classify_regime({q, *cfg.lambda1});
        if (report.e_split) {
            Cell weight = std::monostate{};
            if (!cfg.N.empty()) weight = 1.0 / std::ldexp(1.0, single_N(cfg) / 2);
            t.rows.push_back({std::string("delta"), *report.e_split, weight});
        }
    }
    if (cfg.ensemble) {
        const auto ens = ed::run_ensemble(ensemble_spec(cfg, single_N(cfg), *cfg.lambda1, 6), run_options(cfg));
        const auto h = ed::histogram(ens, cfg.bins, -edge, edge);
        for (std::size_t b = 0; b < h.density.size(); ++b) {
            t.rows.push_back({std::string("histogram"), h.center(b), h.density[b]});
        }
    }
    return t;
}

Table cmd_reproduce_table(const RunConfig& cfg) {
    const double lambda1 = cfg.lambda1.value_or(3.0);
    if (cfg.q) throw ConfigError("reproduce-table derives q from N; --q is not accepted");
    const std::vector<int> Ns = cfg.N.empty() ? std::vector<int>{20, 22, 24} : cfg.N;
    for (int n : Ns) check_N(n, cfg.large);

    Table t;
    t.command = "reproduce-table";
    std::string list;
    for (int n : Ns) list += (list.empty() ? "" : ";") + std::to_string(n);
    t.config = {{"N", list}, {"p", std::to_string(cfg.p)}, {"lambda1", num(lambda1)}};
    add_ensemble_config(t.config, cfg);
    t.columns = {"N",          "q_eff",          "lambda_critical", "status",  "mean_split",
                 "analytic_split", "sigma_split", "n_accepted",      "n_flagged"};

    for (int n : Ns) {
        const double q = qcomb::qtilde(n, cfg.p);
        const double lc = q >= 0.0 ? spectral::lambda_critical(q) : 0.0;
        std::vector<Cell> row{std::int64_t{n}, q};
        if (q < 0.0) {
            row.insert(row.end(), {std::monostate{}, std::string("q_eff below zero"), std::monostate{},
                                   std::monostate{}, std::monostate{}, std::monostate{}, std::monostate{}});
        } else if (lambda1 <= lc) {
            row.emplace_back(lc);
            row.insert(row.end(), {std::string("no split eigenvalue"), std::monostate{}, std::monostate{},
                                   std::monostate{}, std::monostate{}, std::monostate{}});
        } else {
            row.emplace_back(lc);
            const auto ens = ed::run_ensemble(ensemble_spec(cfg, n, lambda1, 6), run_options(cfg));
            const auto& s = ens.split.value();
            const auto accepted = static_cast<std::int64_t>(s.per_sample.size() - s.flagged.size());
            row.insert(row.end(), {std::string("split"), std::isfinite(s.mean) ? Cell(s.mean) : Cell{},
                                   s.analytic, std::isfinite(s.sigma_split) ? Cell(s.sigma_split) : Cell{},
                                   accepted, static_cast<std::int64_t>(s.flagged.size())});
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string cmd_ensemble(const RunConfig& cfg) {
    const double lambda1 = require_lambda1(cfg);
    if (cfg.q) throw ConfigError("ensemble derives q from N; --q is not accepted");
    if (cfg.pmax > 12) throw ConfigError("--pmax must be <= 12 for an ensemble");
    const auto spec = ensemble_spec(cfg, single_N(cfg), lambda1, cfg.pmax);
    const auto result = ed::run_ensemble(spec, run_options(cfg));
    if (cfg.format == Format::Json) return ed::dump_ensemble_json(result) + "\n";
    std::ostringstream os;
    os << "# sykspike ensemble\n";
    os << "# N=" << spec.N << "\n# p=" << spec.p << "\n# lambda1=" << num(spec.lambda1)
       << "\n# samples=" << spec.sample_count << "\n# seed=" << spec.master_seed << '\n';
    ed::write_eigenvalue_csv(os, result);
    return os.str();
}

namespace {

void add_options(CLI::App& sub, RunConfig& cfg, std::string& format, const std::string& flags) {
    std::istringstream names(flags);
    std::string name;
    while (names >> name) {
        if (name == "N") sub.add_option("--N", cfg.N, "Number of Majorana fermions (comma list for reproduce-table)")->delimiter(',');
        else if (name == "p") sub.add_option("--p", cfg.p, "Interaction order (even)");
        else if (name == "lambda1") sub.add_option("--lambda1", cfg.lambda1, "Rank-one source strength");
        else if (name == "q") sub.add_option("--q", cfg.q, "Crossing weight in [0, 1)");
        else if (name == "order") sub.add_option("--order", cfg.order, "Series truncation order");
        else if (name == "pmax") sub.add_option("--pmax", cfg.pmax, "Largest moment order");
        else if (name == "samples") sub.add_option("--samples", cfg.samples, "Ensemble size");
        else if (name == "seed") sub.add_option("--seed", cfg.seed, "Master seed");
        else if (name == "bins") sub.add_option("--bins", cfg.bins, "Histogram bins");
        else if (name == "grid") sub.add_option("--grid", cfg.grid, "Density grid points");
        else if (name == "large") sub.add_flag("--large", cfg.large, "Allow N above the desk-scale limit");
        else if (name == "ensemble") sub.add_flag("--ensemble", cfg.ensemble, "Add exact-diagonalization data");
        else if (name == "threads") sub.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)");
    }
    sub.add_option("--out", cfg.out, "Output file (default stdout)");
    sub.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

void write_error(std::ostream& err, const std::string& kind, const std::string& message) {
    nlohmann::ordered_json j;
    j["schema_version"] = kTableSchemaVersion;
    j["error"] = {{"kind", kind}, {"message", message}};
    err << j.dump() << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact moments, phase transition and split eigenvalue of the SYK model with a rank-one source"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "csv";

    struct Sub {
        const char* name;
        const char* help;
        const char* flags;
    };
    const Sub subs[] = {
        {"moments", "Moment table m_p", "N p lambda1 q order pmax samples seed bins ensemble threads"},
        {"regime", "Phase of the composition scheme", "N p lambda1 q"},
        {"split", "Split eigenvalue from the secular equation", "N p lambda1 q"},
        {"density", "Bulk density curve, delta marker and histogram overlay",
         "N p lambda1 q grid samples seed bins ensemble threads"},
        {"reproduce-table", "Split-eigenvalue table from exact diagonalization",
         "N p lambda1 samples seed bins large threads"},
        {"ensemble", "Raw ensemble run (JSON result or CSV eigenvalues)", "N p lambda1 pmax samples seed bins large threads"},
    };
    for (const auto& s : subs) add_options(*app.add_subcommand(s.name, s.help), cfg, format, s.flags);

    std::vector<std::string> argv_store{"sykspike"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        write_error(err, "usage_error", e.what());
        return 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        cfg.format = format == "json" ? Format::Json : Format::Csv;
        cfg.validate();

        std::string text;
        if (cfg.command == "ensemble") {
            text = cmd_ensemble(cfg);
        } else {
            Table t;
            if (cfg.command == "moments") t = cmd_moments(cfg);
            else if (cfg.command == "regime") t = cmd_regime(cfg);
            else if (cfg.command == "split") t = cmd_split(cfg);
            else if (cfg.command == "density") t = cmd_density(cfg);
            else t = cmd_reproduce_table(cfg);
            text = cfg.format == Format::Json ? to_json(t) : to_csv(t);
        }

        if (cfg.out) {
            std::ofstream f(*cfg.out, std::ios::binary);
            if (!f) throw ConfigError("cannot open output file " + *cfg.out);
            f << text;
            if (!f) throw ConfigError("failed writing " + *cfg.out);
        } else {
            out << text;
        }
        return 0;
    } catch (const Error& e) {
        write_error(err, e.kind(), e.what());
    } catch (const std::exception& e) {
        write_error(err, "internal_error", e.what());
    }
    return 1;
}

}  // namespace sykspike::cli
