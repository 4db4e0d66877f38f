#include "sykspike/cli/table.hpp"

#include "sykspike/ensemble_io.hpp"
#include "sykspike/error.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace sykspike::cli {

using ojson = nlohmann::ordered_json;

namespace {

std::string csv_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(v);
            else if constexpr (std::is_same_v<T, double>) return ed::format_double(v);
            else {
                if (v.find_first_of(",\n\"") != std::string::npos) throw ConfigError("CSV cell may not contain , \" or newline");
                return v;
            }
        },
        c);
}

ojson json_cell(const Cell& c) {
    return std::visit(
        [](const auto& v) -> ojson {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return nullptr;
            else if constexpr (std::is_same_v<T, double>) return std::isfinite(v) ? ojson(v) : ojson(nullptr);
            else return v;
        },
        c);
}

Cell parse_csv_cell(const std::string& s) {
    if (s.empty()) return std::monostate{};
    std::int64_t i = 0;
    auto [ip, iec] = std::from_chars(s.data(), s.data() + s.size(), i);
    if (iec == std::errc() && ip == s.data() + s.size()) return i;
    double d = 0.0;
    auto [dp, dec] = std::from_chars(s.data(), s.data() + s.size(), d);
    if (dec == std::errc() && dp == s.data() + s.size()) return d;
    return s;
}

Cell parse_json_cell(const ojson& j) {
    if (j.is_null()) return std::monostate{};
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return j.get<std::string>();
    throw ConfigError("unsupported JSON table cell: " + j.dump());
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

bool same_value(const Cell& a, const Cell& b) {
    auto as_number = [](const Cell& c, double& out) {
        if (auto* i = std::get_if<std::int64_t>(&c)) return out = static_cast<double>(*i), true;
        if (auto* d = std::get_if<double>(&c)) return out = *d, true;
        return false;
    };
    double x = 0, y = 0;
    if (as_number(a, x) && as_number(b, y)) return x == y;
    return a == b;
}

std::size_t Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return i;
    throw ConfigError("table has no column '" + name + "'");
}

bool Table::equivalent(const Table& other) const {
    if (command != other.command || config != other.config || columns != other.columns ||
        rows.size() != other.rows.size())
        return false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != other.rows[r].size()) return false;
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            if (!same_value(rows[r][c], other.rows[r][c])) return false;
    }
    return true;
}

void write_csv(std::ostream& os, const Table& t) {
    os << "# sykspike " << t.command << '\n';
    os << "# schema_version=" << kTableSchemaVersion << '\n';
    for (const auto& [k, v] : t.config) os << "# " << k << '=' << v << '\n';
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& t) {
    ojson j;
    j["schema_version"] = kTableSchemaVersion;
    j["command"] = t.command;
    ojson config = ojson::object();
    for (const auto& [k, v] : t.config) config[k] = v;
    j["config"] = std::move(config);
    j["columns"] = t.columns;
    ojson rows = ojson::array();
    for (const auto& row : t.rows) {
        ojson r = ojson::array();
        for (const auto& c : row) r.push_back(json_cell(c));
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    os << j.dump() << '\n';
}

std::string to_csv(const Table& t) {
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}

std::string to_json(const Table& t) {
    std::ostringstream os;
    write_json(os, t);
    return os.str();
}

Table parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Table t;
    if (!std::getline(is, line) || line.rfind("# sykspike ", 0) != 0) throw ConfigError("not a sykspike CSV table");
    t.command = line.substr(11);
    if (!std::getline(is, line) || line != "# schema_version=" + std::to_string(kTableSchemaVersion)) {
        throw ConfigError("unsupported CSV table schema: " + line);
    }
    while (std::getline(is, line) && line.rfind("# ", 0) == 0) {
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("malformed CSV config line: " + line);
        t.config.emplace_back(line.substr(2, eq - 2), line.substr(eq + 1));
    }
    t.columns = split_commas(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto cells = split_commas(line);
        if (cells.size() != t.columns.size()) throw ConfigError("CSV row width mismatch: " + line);
        std::vector<Cell> row;
        row.reserve(cells.size());
        for (const auto& c : cells) row.push_back(parse_csv_cell(c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table parse_json(const std::string& text) {
    try {
        const auto j = ojson::parse(text);
        if (j.at("schema_version").get<int>() != kTableSchemaVersion) throw ConfigError("unsupported JSON table schema");
        Table t;
        t.command = j.at("command").get<std::string>();
        for (const auto& [k, v] : j.at("config").items()) t.config.emplace_back(k, v.get<std::string>());
        t.columns = j.at("columns").get<std::vector<std::string>>();
        for (const auto& r : j.at("rows")) {
            std::vector<Cell> row;
            for (const auto& c : r) row.push_back(parse_json_cell(c));
            if (row.size() != t.columns.size()) throw ConfigError("JSON row width mismatch");
            t.rows.push_back(std::move(row));
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed JSON table: ") + e.what());
    }
}

}  // namespace sykspike::cli
