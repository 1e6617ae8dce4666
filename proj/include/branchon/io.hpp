// Tabular output in CSV and JSON.  Both formats carry the same content: the
// fully resolved run configuration, the column names, and the rows.  CSV
// leads with "# key=value" header lines; JSON mirrors them in a "config"
// object.  Floating-point values are printed with enough digits (%.17g) to
// round-trip exactly, and nothing time- or host-dependent is ever written,
// so identical runs produce identical bytes.
#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "branchon/errors.hpp"

namespace branchon {

using Cell = std::variant<double, long, std::string>;

struct Table {
    std::vector<std::pair<std::string, std::string>> config;  // resolved run configuration
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_config(const std::string& key, const std::string& value) {
        config.emplace_back(key, value);
    }
    // keep string literals away from the bool overload
    void add_config(const std::string& key, const char* value) {
        config.emplace_back(key, value);
    }
    void add_config(const std::string& key, double value);
    void add_config(const std::string& key, long value) {
        config.emplace_back(key, std::to_string(value));
    }
    void add_config(const std::string& key, int value) {
        config.emplace_back(key, std::to_string(value));
    }
    void add_config(const std::string& key, bool value) {
        config.emplace_back(key, value ? "true" : "false");
    }
};

// Shortest exact decimal form of a double.
inline std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

inline void Table::add_config(const std::string& key, double value) {
    config.emplace_back(key, format_double(value));
}

inline std::string to_csv(const Table& table) {
    std::ostringstream out;
    for (const auto& [key, value] : table.config) {
        out << "# " << key << "=" << value << "\n";
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw DomainError("row width does not match column count");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ",";
            if (const auto* d = std::get_if<double>(&row[i])) {
                out << format_double(*d);
            } else if (const auto* n = std::get_if<long>(&row[i])) {
                out << *n;
            } else {
                out << std::get<std::string>(row[i]);
            }
        }
        out << "\n";
    }
    return out.str();
}

inline nlohmann::ordered_json to_json(const Table& table) {
    nlohmann::ordered_json doc;
    auto& config = doc["config"];
    for (const auto& [key, value] : table.config) config[key] = value;
    doc["columns"] = table.columns;
    auto& rows = doc["rows"];
    rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw DomainError("row width does not match column count");
        }
        nlohmann::ordered_json r = nlohmann::ordered_json::array();
        for (const auto& cell : row) {
            if (const auto* d = std::get_if<double>(&cell)) {
                r.push_back(*d);
            } else if (const auto* n = std::get_if<long>(&cell)) {
                r.push_back(*n);
            } else {
                r.push_back(std::get<std::string>(cell));
            }
        }
        rows.push_back(std::move(r));
    }
    return doc;
}

inline std::string render(const Table& table, const std::string& format) {
    if (format == "csv") return to_csv(table);
    if (format == "json") return to_json(table).dump(2) + "\n";
    throw ConfigError("format must be 'csv' or 'json', got '" + format + "'");
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << content;
    if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

}  // namespace branchon
