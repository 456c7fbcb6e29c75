#include "chainsim/io.hpp"

#include <cstdio>
#include <fstream>

#ifndef CHAINSIM_VERSION
#define CHAINSIM_VERSION "0.0.0"
#endif

namespace chainsim {

std::string version() { return CHAINSIM_VERSION; }

void Table::add(std::string name, std::vector<double> values) {
    if (!columns_.empty() && values.size() != rows()) {
        throw std::invalid_argument("Table: column '" + name + "' has " +
                                    std::to_string(values.size()) + " rows, expected " +
                                    std::to_string(rows()));
    }
    names_.push_back(std::move(name));
    columns_.push_back(std::move(values));
}

void Table::add(std::string name, const RVector& values) {
    add(std::move(name), std::vector<double>(values.data(), values.data() + values.size()));
}

namespace {

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void ensure_parent(const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
}

}  // namespace

std::string to_csv(const Table& table) {
    std::string out;
    for (size_t c = 0; c < table.cols(); ++c) {
        if (c) out += ',';
        out += quote(table.names()[c]);
    }
    out += "\r\n";
    char buf[40];
    for (size_t r = 0; r < table.rows(); ++r) {
        for (size_t c = 0; c < table.cols(); ++c) {
            if (c) out += ',';
            std::snprintf(buf, sizeof buf, "%.17g", table.at(r, c));
            out += buf;
        }
        out += "\r\n";
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const Table& table) {
    ensure_parent(path);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f << to_csv(table);
    if (!f) throw std::runtime_error("failed writing " + path.string());
}

void write_sidecar(const std::filesystem::path& csv_path, const Table& table,
                   const Provenance& provenance) {
    nlohmann::json j;
    j["tool"] = "chainsim";
    j["version"] = version();
    j["command"] = provenance.command;
    j["method"] = provenance.method;
    j["data"] = csv_path.filename().string();
    j["columns"] = table.names();
    j["rows"] = table.rows();
    j["config"] = provenance.config;
    for (auto it = provenance.extra.begin(); it != provenance.extra.end(); ++it) j[it.key()] = it.value();

    std::filesystem::path side = csv_path;
    side.replace_extension(".json");
    ensure_parent(side);
    std::ofstream f(side, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + side.string() + " for writing");
    f << j.dump(2) << '\n';
}

std::filesystem::path write_result(const std::filesystem::path& dir, const std::string& stem,
                                   const Table& table, const Provenance& provenance) {
    const std::filesystem::path csv = dir / (stem + ".csv");
    write_csv(csv, table);
    write_sidecar(csv, table, provenance);
    return csv;
}

}  // namespace chainsim
