#include "xic/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace xic {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

namespace {

std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<double>(c)) return format_double(std::get<double>(c));
    return std::get<std::string>(c);
}

void atomic_write(const std::filesystem::path& file, const std::string& contents) {
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << contents;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

}  // namespace

void write_csv(const Report& r, const std::filesystem::path& file) {
    std::string out;
    out += "# config: " + r.config.dump() + "\n";
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
        if (i) out += ',';
        out += r.columns[i];
    }
    out += '\n';
    for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_to_string(row[i]);
        }
        out += '\n';
    }
    atomic_write(file, out);
}

void write_json_object(const nlohmann::json& j, const std::filesystem::path& file) {
    atomic_write(file, j.dump(2) + "\n");
}

void write_json(const Report& r, const std::filesystem::path& file) {
    nlohmann::json j;
    j["name"] = r.name;
    j["config"] = r.config;
    j["columns"] = r.columns;
    auto rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        auto jr = nlohmann::json::array();
        for (const auto& c : row) {
            if (std::holds_alternative<double>(c))
                jr.push_back(std::get<double>(c));
            else
                jr.push_back(std::get<std::string>(c));
        }
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["summary"] = r.summary;
    atomic_write(file, j.dump(2) + "\n");
}

}  // namespace xic
