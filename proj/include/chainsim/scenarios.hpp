#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "chainsim/config.hpp"
#include "chainsim/io.hpp"

namespace chainsim {

// Free-space figures ---------------------------------------------------------

/// OBC band, its quadratic expansion around q0 and the mode occupancy of
/// packets of several widths.
struct DispersionFigure {
    int sites = 100;
    double hopping = 0.07;
    double quasimomentum = pi / 2;
    std::vector<double> widths{1.0, 5.0};
};
Table dispersion_table(const DispersionFigure& fig);

/// Collective decay rates of an open chain and the superradiant fraction
/// versus spacing.
struct RatesFigure {
    int sites = 110;
    double spacing = 0.08;
    double dipole_angle = pi / 2;
    Boundary boundary = Boundary::open;
    std::vector<double> spacings{0.05, 0.08, 0.15, 0.25};
};
struct RatesResult {
    Table rates;     ///< k, q, rate
    Table fraction;  ///< spacing, superradiant_fraction
    double fraction_at_spacing = 0.0;
};
RatesResult collective_rate_figure(const RatesFigure& fig);

/// Stationary packets (q0 = 0 and q0 = pi) under independent and collective
/// decay, sampled at a single time.
struct SubradianceFigure {
    int sites = 110;
    double spacing = 0.08;
    double dipole_angle = pi / 2;
    double width = 5.0;
    double center = 55.5;
    double time = 1.0;
};
struct SubradianceResult {
    /// Populations at `time`: q0 = 0 and q0 = pi, independent and collective decay.
    RVector zero_independent, zero_collective, pi_independent, pi_collective;
    double survival(const RVector& p) const { return p.sum(); }
};
SubradianceResult subradiance_figure(const SubradianceFigure& fig);

/// Population heatmap of a moving packet for both decay models.
struct PacketFigure {
    int sites = 110;
    double spacing = 0.08;
    double dipole_angle = pi / 2;
    WavepacketSpec packet{25.0, 5.0, pi / 2, 5.0, 0.01};
    TimeGrid time{8.0, 160};
};
Table heatmap_table(const std::vector<double>& times, const RMatrix& populations,
                    bool with_photon = false);
std::array<Table, 2> packet_figure(const PacketFigure& fig);  ///< independent, collective

// Cavity figures -------------------------------------------------------------

/// How the island detuning is chosen for a given coupling symmetry.
enum class DetuningChoice {
    matched,     ///< each symmetry uses its own upper polariton
    asymmetric,  ///< both use the asymmetric upper polariton
};

/// Island / cavity / island chain. Hoppings, coupling and disorder width
/// are in units of `unit` (Omega); the cavity loss is in units of gamma.
struct CavityScenario {
    int island_sites = 30;
    int cavity_sites = 50;
    double spacing = 0.08;
    double dipole_angle = pi / 2;
    std::optional<double> unit;  ///< Omega in units of gamma; unset = dipole shift at `spacing`
    double island_hopping = 10.0;
    double cavity_hopping = 1.0;
    /// Island/cavity bond. Unset = island_hopping * sqrt(2 N), the value at
    /// which the polariton's edge amplitude 1/sqrt(2N) couples to the island
    /// with the island's own hopping.
    std::optional<double> junction_hopping;
    double coupling = 90.0;
    double cavity_loss = 1.0;
    DetuningChoice detuning = DetuningChoice::matched;
    DecayModel decay_model = DecayModel::collective;
    WavepacketSpec packet{15.5, 3.0, pi / 2, 5.0, 0.01};
    TimeGrid time{20.0, 400};
    DisorderSpec disorder{DisorderDistribution::uniform, 1.0, 100, 2024};

    double omega() const;
    double junction() const;  ///< in units of Omega
    int sites() const { return cavity_sites + 2 * island_sites; }
    double island_detuning(CouplingSymmetry symmetry) const;
    ChainConfig cavity_chain(CouplingSymmetry symmetry) const;
    /// Same emitters without the photon, the island offset and the matched
    /// junction: the islands join the central section with their own hopping.
    ChainConfig free_chain() const;
    /// Disorder with its width converted to units of gamma.
    DisorderSpec disorder_in_gamma() const;
};

struct CouplingComparison {
    TransportResult symmetric;
    TransportResult asymmetric;
};
CouplingComparison coupling_comparison(const CavityScenario& sc);

struct FreeSpaceComparison {
    TransportResult cavity;
    TransportResult free;
};
/// Clean chain with the cavity (asymmetric couplings) and without it.
FreeSpaceComparison free_space_vs_cavity(const CavityScenario& sc);

struct DisorderComparison {
    FreeSpaceComparison clean;
    EnsembleResult cavity;
    EnsembleResult free;
};
DisorderComparison disorder_comparison(const CavityScenario& sc,
                                       Execution execution = Execution::parallel);

struct PolaritonDisorder {
    PolaritonSpectrum clean;
    PolaritonSpectrum disordered;
    double max_dark_shift = 0.0;     ///< largest shift of sorted non-polaritonic levels
    double max_polariton_shift = 0.0;
    double collective_coupling = 0.0;  ///< g sqrt(N)
};
/// Closed intracavity spectrum with and without one disorder realization.
PolaritonDisorder polariton_disorder(const CavityScenario& sc);

// Drivers ----------------------------------------------------------------------

const std::vector<std::string>& figure_names();
CavityScenario parse_cavity_scenario(Section& s);

struct CommandResult {
    std::vector<std::filesystem::path> files;
    Json summary = Json::object();
};

/// Runs a figure pipeline from its config ({"figure": name, "parameters": {...}}).
/// `name` must match the config's figure entry when that entry is present.
CommandResult run_figure(const std::string& name, const Json& config,
                         const std::filesystem::path& out_dir);

const std::vector<std::string>& command_names();
/// Runs a generic subcommand on a RunConfig.
CommandResult run_command(const std::string& name, const RunConfig& config,
                          const std::filesystem::path& out_dir);

}  // namespace chainsim
