#include "sykspike/ensemble_io.hpp"

#include "sykspike/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

namespace sykspike::ed {

using ojson = nlohmann::ordered_json;

namespace {

ojson optional_number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }
double number_or_nan(const ojson& j) { return j.is_null() ? std::nan("") : j.get<double>(); }

}  // namespace

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

ojson to_json(const EnsembleResult& r) {
    ojson j;
    j["schema_version"] = kEnsembleSchemaVersion;
    j["spec"] = {{"N", r.spec.N},
                 {"p", r.spec.p},
                 {"lambda1", r.spec.lambda1},
                 {"sample_count", r.spec.sample_count},
                 {"master_seed", r.spec.master_seed},
                 {"bins", r.spec.bins},
                 {"p_max", r.spec.p_max},
                 {"split_margin", r.spec.split_margin}};
    ojson samples = ojson::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"index", s.index}, {"seed", s.seed}, {"eigenvalues", s.eigenvalues}});
    }
    j["samples"] = std::move(samples);

    ojson stats;
    stats["q_eff"] = r.q_eff;
    stats["edge"] = r.edge;
    stats["histogram"] = {{"lo", r.histogram.lo},
                          {"hi", r.histogram.hi},
                          {"total", r.histogram.total},
                          {"outside", r.histogram.outside},
                          {"density", r.histogram.density}};
    ojson moments = ojson::array();
    for (const auto& m : r.empirical_moments) {
        moments.push_back({{"p", m.p}, {"estimate", m.estimate}, {"standard_error", m.standard_error}});
    }
    stats["moments"] = std::move(moments);
    if (r.split) {
        const auto& s = *r.split;
        ojson per = ojson::array();
        for (const auto& v : s.per_sample) per.push_back(v ? ojson(*v) : ojson(nullptr));
        stats["split"] = {{"threshold", s.threshold},  {"analytic", s.analytic},
                          {"mean", optional_number(s.mean)}, {"sigma_split", optional_number(s.sigma_split)},
                          {"per_sample", std::move(per)}, {"flagged", s.flagged}};
    } else {
        stats["split"] = nullptr;
    }
    j["statistics"] = std::move(stats);
    return j;
}

EnsembleResult ensemble_from_json(const ojson& j) {
    try {
        if (j.at("schema_version").get<int>() != kEnsembleSchemaVersion) {
            throw ConfigError("unsupported ensemble schema_version " + j.at("schema_version").dump());
        }
        EnsembleResult r;
        const auto& sp = j.at("spec");
        r.spec.N = sp.at("N").get<int>();
        r.spec.p = sp.at("p").get<int>();
        r.spec.lambda1 = sp.at("lambda1").get<double>();
        r.spec.sample_count = sp.at("sample_count").get<int>();
        r.spec.master_seed = sp.at("master_seed").get<std::uint64_t>();
        r.spec.bins = sp.at("bins").get<int>();
        r.spec.p_max = sp.at("p_max").get<int>();
        r.spec.split_margin = sp.at("split_margin").get<double>();
        for (const auto& s : j.at("samples")) {
            r.samples.push_back({s.at("index").get<std::size_t>(), s.at("seed").get<std::uint64_t>(),
                                 s.at("eigenvalues").get<std::vector<double>>()});
        }
        const auto& st = j.at("statistics");
        r.q_eff = st.at("q_eff").get<double>();
        r.edge = st.at("edge").get<double>();
        const auto& h = st.at("histogram");
        r.histogram = {h.at("lo").get<double>(), h.at("hi").get<double>(), h.at("density").get<std::vector<double>>(),
                       h.at("total").get<std::size_t>(), h.at("outside").get<std::size_t>()};
        for (const auto& m : st.at("moments")) {
            r.empirical_moments.push_back(
                {m.at("p").get<int>(), m.at("estimate").get<double>(), m.at("standard_error").get<double>()});
        }
        if (!st.at("split").is_null()) {
            const auto& s = st.at("split");
            SplitStatistics ss;
            ss.threshold = s.at("threshold").get<double>();
            ss.analytic = s.at("analytic").get<double>();
            ss.mean = number_or_nan(s.at("mean"));
            ss.sigma_split = number_or_nan(s.at("sigma_split"));
            for (const auto& v : s.at("per_sample")) {
                ss.per_sample.push_back(v.is_null() ? std::nullopt : std::optional<double>(v.get<double>()));
            }
            ss.flagged = s.at("flagged").get<std::vector<std::size_t>>();
            r.split = std::move(ss);
        }
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed ensemble JSON: ") + e.what());
    }
}

std::string dump_ensemble_json(const EnsembleResult& result) { return to_json(result).dump(); }

EnsembleResult parse_ensemble_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed ensemble JSON: ") + e.what());
    }
    return ensemble_from_json(j);
}

void write_eigenvalue_csv(std::ostream& os, const EnsembleResult& result) {
    os << "sample_index,eigen_index,value\n";
    for (const auto& s : result.samples) {
        for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
            os << s.index << ',' << i << ',' << format_double(s.eigenvalues[i]) << '\n';
        }
    }
}

std::vector<SampleRecord> read_eigenvalue_csv(std::istream& is) {
    std::string line;
    while (std::getline(is, line) && line.rfind('#', 0) == 0) {
    }
    if (line != "sample_index,eigen_index,value") {
        throw ConfigError("eigenvalue CSV must start with 'sample_index,eigen_index,value'");
    }
    std::vector<SampleRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string a, b, c;
        if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
            throw ConfigError("malformed eigenvalue CSV row: " + line);
        }
        const auto sample = static_cast<std::size_t>(std::stoull(a));
        const auto eigen = static_cast<std::size_t>(std::stoull(b));
        if (out.empty() || out.back().index != sample) out.push_back({sample, 0, {}});
        if (eigen != out.back().eigenvalues.size()) throw ConfigError("eigenvalue CSV rows out of order: " + line);
        out.back().eigenvalues.push_back(std::stod(c));
    }
    return out;
}

}  // namespace sykspike::ed
