#pragma once

// EnsembleResult on disk. JSON layout (schema_version 1):
//   { "schema_version": 1,
//     "spec": { N, p, lambda1, sample_count, master_seed, bins, p_max, split_margin },
//     "samples": [ { "index", "seed", "eigenvalues": [...] }, ... ],
//     "statistics": { q_eff, edge, histogram{lo,hi,total,outside,density},
//                     moments[{p, estimate, standard_error}], split{...} | null } }
// CSV eigenvalue dump: optional "#" comment lines, then the header
// "sample_index,eigen_index,value" and one row per eigenvalue.

#include "sykspike/ensemble.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>

namespace sykspike::ed {

inline constexpr int kEnsembleSchemaVersion = 1;

nlohmann::ordered_json to_json(const EnsembleResult& result);
EnsembleResult ensemble_from_json(const nlohmann::ordered_json& j);

/// Compact JSON text; identical results give identical bytes.
std::string dump_ensemble_json(const EnsembleResult& result);
EnsembleResult parse_ensemble_json(const std::string& text);

void write_eigenvalue_csv(std::ostream& os, const EnsembleResult& result);
/// Rebuilds samples (index and eigenvalues only) from a CSV dump.
std::vector<SampleRecord> read_eigenvalue_csv(std::istream& is);

/// Decimal with 17 significant digits; parses back to the identical double.
std::string format_double(double v);

}  // namespace sykspike::ed
