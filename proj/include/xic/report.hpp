#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace xic {

using Cell = std::variant<double, std::string>;

// Tagged tabular result: column schema, rows, and the configuration that
// produced it.  Serialized to CSV (17 significant digits, `# config: {...}`
// comment first) or JSON.  Summary holds per-experiment scalars.
struct Report {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::json config;
    nlohmann::json summary;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

// Round-trip-safe formatting (17 significant digits).
std::string format_double(double x);

// Atomic writers (write to a temp file in the same directory, then rename).
void write_csv(const Report& r, const std::filesystem::path& file);
void write_json(const Report& r, const std::filesystem::path& file);
void write_json_object(const nlohmann::json& j, const std::filesystem::path& file);

}  // namespace xic
