#include "chainsim/config.hpp"

#include <cmath>
#include <fstream>

namespace chainsim {

Json load_json(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError(path.string(), "cannot open file");
    try {
        return Json::parse(f, nullptr, true, true);
    } catch (const Json::parse_error& e) {
        throw ConfigError(path.string(), std::string("invalid JSON: ") + e.what());
    }
}

Section::Section(const Json& json, std::string path) : json_(&json), path_(std::move(path)) {
    if (!json.is_object()) throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
}

std::string Section::field(const std::string& key) const {
    return path_.empty() ? key : path_ + "." + key;
}

bool Section::has(const std::string& key) const { return json_->contains(key); }

const Json& Section::raw(const std::string& key) {
    used_.insert(key);
    return json_->at(key);
}

double Section::number(const std::string& key, double fallback) {
    return optional_number(key).value_or(fallback);
}

std::optional<double> Section::optional_number(const std::string& key) {
    if (!has(key)) return std::nullopt;
    const Json& v = raw(key);
    if (!v.is_number()) throw ConfigError(field(key), "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ConfigError(field(key), "must be finite");
    return x;
}

int Section::integer(const std::string& key, int fallback) {
    if (!has(key)) return fallback;
    const Json& v = raw(key);
    if (!v.is_number_integer()) throw ConfigError(field(key), "expected an integer");
    return v.get<int>();
}

std::uint64_t Section::unsigned_integer(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const Json& v = raw(key);
    if (!v.is_number_unsigned()) throw ConfigError(field(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
}

bool Section::flag(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const Json& v = raw(key);
    if (!v.is_boolean()) throw ConfigError(field(key), "expected true or false");
    return v.get<bool>();
}

std::string Section::text(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    const Json& v = raw(key);
    if (!v.is_string()) throw ConfigError(field(key), "expected a string");
    return v.get<std::string>();
}

std::vector<double> Section::numbers(const std::string& key) {
    if (!has(key)) return {};
    const Json& v = raw(key);
    if (!v.is_array()) throw ConfigError(field(key), "expected an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) {
            throw ConfigError(field(key) + "[" + std::to_string(i) + "]", "expected a number");
        }
        out.push_back(v[i].get<double>());
    }
    return out;
}

std::optional<Section> Section::child(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return Section(raw(key), field(key));
}

void Section::finish() const {
    for (auto it = json_->begin(); it != json_->end(); ++it) {
        if (!used_.count(it.key())) throw ConfigError(field(it.key()), "unknown key");
    }
}

namespace {

[[noreturn]] void bad_choice(const std::string& field, const std::string& value,
                             const std::string& allowed) {
    throw ConfigError(field, "unknown value '" + value + "' (expected " + allowed + ")");
}

}  // namespace

Boundary parse_boundary(const std::string& s, const std::string& field) {
    if (s == "open") return Boundary::open;
    if (s == "periodic") return Boundary::periodic;
    bad_choice(field, s, "open or periodic");
}

Truncation parse_truncation(const std::string& s, const std::string& field) {
    if (s == "nearest_neighbor") return Truncation::nearest_neighbor;
    if (s == "full") return Truncation::full;
    bad_choice(field, s, "nearest_neighbor or full");
}

DecayModel parse_decay_model(const std::string& s, const std::string& field) {
    if (s == "independent") return DecayModel::independent;
    if (s == "collective") return DecayModel::collective;
    bad_choice(field, s, "independent or collective");
}

Method parse_method(const std::string& s, const std::string& field) {
    if (s == "expm") return Method::expm;
    if (s == "rk4") return Method::rk4;
    if (s == "spectral") return Method::spectral;
    bad_choice(field, s, "expm, rk4 or spectral");
}

CouplingSymmetry parse_symmetry(const std::string& s, const std::string& field) {
    if (s == "symmetric") return CouplingSymmetry::symmetric;
    if (s == "asymmetric") return CouplingSymmetry::asymmetric;
    bad_choice(field, s, "symmetric or asymmetric");
}

DisorderDistribution parse_distribution(const std::string& s, const std::string& field) {
    if (s == "uniform") return DisorderDistribution::uniform;
    if (s == "gaussian") return DisorderDistribution::gaussian;
    bad_choice(field, s, "uniform or gaussian");
}

ConcurrenceNormalization parse_normalization(const std::string& s, const std::string& field) {
    if (s == "five_width") return ConcurrenceNormalization::five_width;
    if (s == "pair_count") return ConcurrenceNormalization::pair_count;
    bad_choice(field, s, "five_width or pair_count");
}

ChainConfig parse_chain(Section& chain, std::optional<Section> layout, std::optional<Section> cavity) {
    ChainConfig c;
    c.geometry.sites = chain.integer("sites", c.geometry.sites);
    c.geometry.spacing = chain.number("spacing", c.geometry.spacing);
    c.geometry.dipole_angle = chain.number("dipole_angle", c.geometry.dipole_angle);
    c.geometry.boundary = parse_boundary(chain.text("boundary", "open"), chain.field("boundary"));
    c.hopping = chain.optional_number("hopping");
    c.truncation = parse_truncation(chain.text("truncation", "nearest_neighbor"), chain.field("truncation"));
    c.decay_model = parse_decay_model(chain.text("decay_model", "independent"), chain.field("decay_model"));
    c.decay_rate = chain.number("decay_rate", c.decay_rate);
    c.frequency = chain.number("frequency", c.frequency);
    c.detunings = chain.numbers("detunings");
    chain.finish();

    if (c.geometry.sites < 2) throw ConfigError(chain.field("sites"), "need at least 2 sites");
    if (!(c.geometry.spacing > 0.0)) throw ConfigError(chain.field("spacing"), "must be positive");

    std::optional<CouplingSymmetry> symmetry;
    std::optional<double> coupling;
    if (cavity) {
        CavityMode mode;
        mode.frequency = cavity->number("frequency", 0.0);
        mode.loss = cavity->number("loss", 0.0);
        if (cavity->has("couplings")) {
            if (cavity->has("coupling")) {
                throw ConfigError(cavity->field("coupling"), "give either coupling or couplings");
            }
            mode.couplings = cavity->numbers("couplings");
        } else {
            coupling = cavity->optional_number("coupling");
            if (!coupling) throw ConfigError(cavity->field("coupling"), "required");
            symmetry = parse_symmetry(cavity->text("symmetry", "symmetric"), cavity->field("symmetry"));
        }
        cavity->finish();
        c.cavity = mode;
    }

    if (layout) {
        c.island_sites = layout->integer("island_sites", 0);
        c.cavity_sites = layout->integer("cavity_sites", 0);
        c.cavity_hopping = layout->optional_number("cavity_hopping");
        c.junction_hopping = layout->optional_number("junction_hopping");
        if (layout->has("island_detuning") && layout->raw("island_detuning").is_object()) {
            Section m(layout->raw("island_detuning"), layout->field("island_detuning"));
            const CouplingSymmetry sym = parse_symmetry(m.text("symmetry", "asymmetric"), m.field("symmetry"));
            const std::string b = m.text("branch", "upper");
            if (b != "upper" && b != "lower") bad_choice(m.field("branch"), b, "upper or lower");
            m.finish();
            if (!coupling) {
                throw ConfigError(layout->field("island_detuning"),
                                  "matching needs a cavity with a uniform 'coupling'");
            }
            const double hop = c.cavity_hopping.value_or(c.hopping.value_or(
                dipole_shift(c.geometry.spacing, c.geometry.dipole_angle, c.decay_rate)));
            c.island_detuning = matched_detuning(*coupling, c.cavity_sites, hop, sym,
                                                 b == "upper" ? PolaritonBranch::upper
                                                              : PolaritonBranch::lower);
        } else {
            c.island_detuning = layout->number("island_detuning", 0.0);
        }
        layout->finish();
    }

    if (c.cavity && coupling) {
        if (c.cavity_sites < 1) throw ConfigError("layout.cavity_sites", "required with a cavity");
        c.cavity->couplings = coupling_pattern(*coupling, c.cavity_sites, *symmetry);
    }
    c.validate();
    return c;
}

WavepacketSpec parse_packet(Section& s, WavepacketSpec d) {
    d.center = s.number("center", d.center);
    d.width = s.number("width", d.width);
    d.quasimomentum = s.number("quasimomentum", d.quasimomentum);
    d.drive_amplitude = s.number("drive_amplitude", d.drive_amplitude);
    d.pulse_duration = s.number("pulse_duration", d.pulse_duration);
    s.finish();
    if (!(d.width > 0.0)) throw ConfigError(s.field("width"), "must be positive");
    if (!(d.pulse_duration > 0.0)) throw ConfigError(s.field("pulse_duration"), "must be positive");
    return d;
}

TimeGrid parse_time(Section& s, TimeGrid d) {
    d.end = s.number("end", d.end);
    d.steps = s.integer("steps", d.steps);
    s.finish();
    if (!(d.end >= 0.0)) throw ConfigError(s.field("end"), "must be non-negative");
    if (d.steps < 1) throw ConfigError(s.field("steps"), "must be at least 1");
    return d;
}

DisorderSpec parse_disorder(Section& s, DisorderSpec d) {
    d.distribution = parse_distribution(s.text("distribution", "uniform"), s.field("distribution"));
    d.width = s.number("width", d.width);
    d.realizations = s.integer("realizations", d.realizations);
    d.seed = s.unsigned_integer("seed", d.seed);
    s.finish();
    if (!(d.width >= 0.0)) throw ConfigError(s.field("width"), "must be non-negative");
    if (d.realizations < 1) throw ConfigError(s.field("realizations"), "must be at least 1");
    return d;
}

RunConfig parse_run_config(const Json& json) {
    Section root(json, "");
    RunConfig rc;
    rc.source = json;

    auto chain = root.child("chain");
    if (!chain) throw ConfigError("chain", "required");
    rc.chain = parse_chain(*chain, root.child("layout"), root.child("cavity"));
    if (auto p = root.child("packet")) rc.packet = parse_packet(*p);
    if (auto t = root.child("time")) rc.time = parse_time(*t);
    rc.method = parse_method(root.text("method", "expm"), "method");
    if (auto d = root.child("disorder")) rc.disorder = parse_disorder(*d);
    if (auto c = root.child("concurrence")) {
        rc.separation = c->number("separation", rc.separation);
        rc.normalization = parse_normalization(c->text("normalization", "five_width"),
                                               c->field("normalization"));
        c->finish();
    }
    root.finish();
    return rc;
}

}  // namespace chainsim
