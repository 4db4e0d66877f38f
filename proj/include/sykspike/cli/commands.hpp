#pragma once

#include "sykspike/cli/table.hpp"
#include "sykspike/ensemble.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sykspike::cli {

enum class Format { Csv, Json };

struct RunConfig {
    std::string command;
    std::vector<int> N;  // one entry, or a list for reproduce-table
    int p = 4;
    std::optional<double> lambda1;
    std::optional<double> q;
    int order = 24;
    int pmax = 10;
    int samples = 50;
    std::uint64_t seed = 1;
    int bins = 60;
    int grid = 200;
    std::optional<std::string> out;
    Format format = Format::Csv;
    bool large = false;
    bool ensemble = false;
    int threads = 0;  // execution only; never written to output

    /// Command-independent checks; each command adds its own on top.
    void validate() const;
};

inline constexpr int kDeskMaxN = 26;
inline constexpr int kLargeMaxN = 32;

/// q from --q, or qtilde(N, p) from --N; exactly one of the two is required.
double resolve_q(const RunConfig& cfg);

Table cmd_moments(const RunConfig& cfg);
Table cmd_regime(const RunConfig& cfg);
Table cmd_split(const RunConfig& cfg);
Table cmd_density(const RunConfig& cfg);
Table cmd_reproduce_table(const RunConfig& cfg);
/// Full EnsembleResult as JSON, or the eigenvalue dump as CSV.
std::string cmd_ensemble(const RunConfig& cfg);

/// Parses argv (without the program name), runs the command and writes the
/// result to `out` (or the --out file). Errors go to `err` as one JSON record.
/// Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sykspike::cli
