#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chainsim/dynamics.hpp"
#include "chainsim/rng.hpp"
#include "chainsim/wavepacket.hpp"

namespace chainsim {

/// Uniform grid of steps+1 points on [0, end].
std::vector<double> uniform_times(double end, int steps);

/// Normalised single-excitation state written by the pulsed drive, padded
/// with a zero photon amplitude when the chain has a cavity.
CVector launch_state(const ChainConfig& config, const WavepacketSpec& packet);

struct TransportResult {
    std::vector<double> times;
    RMatrix populations;   ///< row per time; sites then photon
    RVector transmission;  ///< empty when the chain has no out-coupling island
    RVector norm;          ///< total excited population
};

/// Launches `packet` and follows the excited manifold (pure-state density).
TransportResult run_transport(const ChainConfig& config, const WavepacketSpec& packet,
                              std::span<const double> times, Method method = Method::expm);

struct DisorderSpec {
    DisorderDistribution distribution = DisorderDistribution::uniform;
    double width = 0.0;
    int realizations = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

struct EnsembleResult {
    std::vector<double> times;
    RMatrix realizations;  ///< row per realization, column per time
    RVector mean;
    RVector standard_error;
};

enum class Execution { parallel, serial };

/// Transmission averaged over diagonal-disorder realizations. Realization r
/// draws its detunings from stream r of the seed; the reduction runs in
/// realization order, so both execution modes give bit-identical results.
EnsembleResult disorder_ensemble(const ChainConfig& config, const WavepacketSpec& packet,
                                 const DisorderSpec& disorder, std::span<const double> times,
                                 Execution execution = Execution::parallel);

/// Detunings of realization `r` (added to any detunings already in the config).
std::vector<double> realization_detunings(const ChainConfig& config, const DisorderSpec& disorder,
                                          int r);

}  // namespace chainsim
