#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainsim/entanglement.hpp"
#include "chainsim/polaritons.hpp"
#include "chainsim/transport.hpp"

namespace chainsim {

using Json = nlohmann::json;

/// Reads a JSON file. Syntax errors become ConfigError("<file>", ...).
Json load_json(const std::filesystem::path& path);

/// Typed access to one JSON object. Every key read is recorded, and finish()
/// rejects keys that were never asked for, so typos surface as errors.
class Section {
public:
    Section(const Json& json, std::string path);

    bool has(const std::string& key) const;
    double number(const std::string& key, double fallback);
    std::optional<double> optional_number(const std::string& key);
    int integer(const std::string& key, int fallback);
    std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback);
    bool flag(const std::string& key, bool fallback);
    std::string text(const std::string& key, const std::string& fallback);
    std::vector<double> numbers(const std::string& key);
    std::optional<Section> child(const std::string& key);
    /// Raw value, marked as used.
    const Json& raw(const std::string& key);

    /// Field path used in error messages, e.g. "chain.sites".
    std::string field(const std::string& key) const;
    void finish() const;

private:
    const Json* json_;
    std::string path_;
    std::set<std::string> used_;
};

Boundary parse_boundary(const std::string& s, const std::string& field);
Truncation parse_truncation(const std::string& s, const std::string& field);
DecayModel parse_decay_model(const std::string& s, const std::string& field);
Method parse_method(const std::string& s, const std::string& field);
CouplingSymmetry parse_symmetry(const std::string& s, const std::string& field);
DisorderDistribution parse_distribution(const std::string& s, const std::string& field);
ConcurrenceNormalization parse_normalization(const std::string& s, const std::string& field);

struct TimeGrid {
    double end = 10.0;
    int steps = 200;

    std::vector<double> values() const { return uniform_times(end, steps); }
};

/// Input of the generic subcommands.
struct RunConfig {
    ChainConfig chain;
    WavepacketSpec packet;
    TimeGrid time;
    Method method = Method::expm;
    std::optional<DisorderSpec> disorder;
    double separation = 30.0;  ///< second packet offset d0 for the concurrence command
    ConcurrenceNormalization normalization = ConcurrenceNormalization::five_width;
    Json source;               ///< the parsed file, echoed into sidecars
};

ChainConfig parse_chain(Section& chain, std::optional<Section> layout, std::optional<Section> cavity);
WavepacketSpec parse_packet(Section& s, WavepacketSpec defaults = {});
TimeGrid parse_time(Section& s, TimeGrid defaults = {});
DisorderSpec parse_disorder(Section& s, DisorderSpec defaults = {});

/// Parses and validates the generic run schema (see README).
RunConfig parse_run_config(const Json& json);

}  // namespace chainsim
