#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainsim/types.hpp"

namespace chainsim {

/// Named numeric columns of equal length.
class Table {
public:
    void add(std::string name, std::vector<double> values);
    void add(std::string name, const RVector& values);

    const std::vector<std::string>& names() const { return names_; }
    size_t rows() const { return columns_.empty() ? 0 : columns_.front().size(); }
    size_t cols() const { return columns_.size(); }
    double at(size_t row, size_t col) const { return columns_[col][row]; }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

/// RFC 4180 CSV with a header row; values use %.17g so they round-trip.
void write_csv(const std::filesystem::path& path, const Table& table);
std::string to_csv(const Table& table);

/// Provenance written next to every CSV (`<name>.json`). Holds no
/// timestamps, so identical runs give identical files.
struct Provenance {
    std::string command;
    std::string method;
    nlohmann::json config;
    nlohmann::json extra = nlohmann::json::object();
};

void write_sidecar(const std::filesystem::path& csv_path, const Table& table,
                   const Provenance& provenance);

/// Writes `<dir>/<stem>.csv` plus its sidecar and returns the CSV path.
std::filesystem::path write_result(const std::filesystem::path& dir, const std::string& stem,
                                   const Table& table, const Provenance& provenance);

std::string version();

}  // namespace chainsim
