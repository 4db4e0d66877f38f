#pragma once

// Tabular command output. Both encodings carry the command name, the schema
// version and the full run configuration ahead of the data.
//
// CSV:   # sykspike <command>
//        # schema_version=1
//        # <key>=<value>          (one line per config entry)
//        <col>,<col>,...
//        <cell>,<cell>,...
// JSON:  {"schema_version":1,"command":...,"config":{...},"columns":[...],"rows":[[...],...]}
//
// Doubles are written with 17 significant digits in CSV and as shortest
// round-trip numbers in JSON; missing cells are empty / null.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sykspike::cli {

inline constexpr int kTableSchemaVersion = 1;

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

/// Numeric cells compare by value regardless of int/double storage.
bool same_value(const Cell& a, const Cell& b);

struct Table {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Index of a column; throws ConfigError when absent.
    std::size_t column(const std::string& name) const;
    /// Same command, config, columns and cell values (see same_value).
    bool equivalent(const Table& other) const;
};

void write_csv(std::ostream& os, const Table& t);
void write_json(std::ostream& os, const Table& t);
std::string to_csv(const Table& t);
std::string to_json(const Table& t);

Table parse_csv(const std::string& text);
Table parse_json(const std::string& text);

}  // namespace sykspike::cli
