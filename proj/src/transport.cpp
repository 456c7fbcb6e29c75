#include "chainsim/transport.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

namespace chainsim {

std::vector<double> uniform_times(double end, int steps) {
    if (!(end >= 0.0) || steps < 1) throw PhysicsError("uniform_times: need end >= 0 and steps >= 1");
    std::vector<double> t(static_cast<size_t>(steps) + 1);
    for (int n = 0; n <= steps; ++n) t[static_cast<size_t>(n)] = end * n / steps;
    return t;
}

CVector launch_state(const ChainConfig& config, const WavepacketSpec& packet) {
    // The short-pulse condition concerns the bonds under the packet (+/- 3w).
    const RMatrix omega = coherent_couplings(config);
    const int s = config.sites();
    const int lo = std::clamp(static_cast<int>(std::floor(packet.center - 3 * packet.width)) - 1, 0, s - 1);
    const int hi = std::clamp(static_cast<int>(std::ceil(packet.center + 3 * packet.width)) - 1, 0, s - 1);
    double hopping = 0.0;
    for (int i = lo; i < hi; ++i) hopping = std::max(hopping, std::abs(omega(i, i + 1)));

    const CVector chain = drive_initialize(packet, config.detunings, config.sites(), hopping);
    const double norm = chain.norm();
    if (!(norm > 0.0)) throw PhysicsError("launch_state: drive wrote no population");

    CVector beta = CVector::Zero(config.dimension());
    beta.head(config.sites()) = chain / norm;
    return beta;
}

TransportResult run_transport(const ChainConfig& config, const WavepacketSpec& packet,
                              std::span<const double> times, Method method) {
    config.validate();
    const Generator gen = build_amplitude_generator(config);
    const AmplitudeTrajectory traj = propagate_amplitudes(gen, launch_state(config, packet), times, method);

    TransportResult out;
    out.times = traj.times;
    out.populations = traj.populations();
    out.norm = out.populations.rowwise().sum();
    if (config.has_layout() && config.island_sites > 0) {
        out.transmission = transmission(out.populations, config);
    }
    return out;
}

void DisorderSpec::validate() const {
    if (!(width >= 0.0) || !std::isfinite(width)) {
        throw ConfigError("disorder.width", "must be finite and non-negative");
    }
    if (realizations < 1) throw ConfigError("disorder.realizations", "must be at least 1");
}

std::vector<double> realization_detunings(const ChainConfig& config, const DisorderSpec& disorder,
                                          int r) {
    CounterRng rng(disorder.seed, static_cast<std::uint64_t>(r));
    std::vector<double> d = draw_detunings(rng, config.sites(), disorder.distribution, disorder.width);
    if (!config.detunings.empty()) {
        for (size_t j = 0; j < d.size(); ++j) d[j] += config.detunings[j];
    }
    return d;
}

EnsembleResult disorder_ensemble(const ChainConfig& config, const WavepacketSpec& packet,
                                 const DisorderSpec& disorder, std::span<const double> times,
                                 Execution execution) {
    config.validate();
    disorder.validate();
    if (!config.has_layout() || config.island_sites < 1) {
        throw PhysicsError("disorder_ensemble: chain has no out-coupling island");
    }
    const int R = disorder.realizations;
    const int T = static_cast<int>(times.size());

    EnsembleResult out;
    out.times.assign(times.begin(), times.end());
    out.realizations = RMatrix::Zero(R, T);

    const auto run_one = [&](int r) {
        ChainConfig c = config;
        c.detunings = realization_detunings(config, disorder, r);
        out.realizations.row(r) = run_transport(c, packet, times).transmission.transpose();
    };

    if (execution == Execution::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
        for (int r = 0; r < R; ++r) {
            try {
                run_one(r);
            } catch (...) {
#pragma omp critical(chainsim_ensemble_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    } else {
        for (int r = 0; r < R; ++r) run_one(r);
    }

    // Ordered reduction: identical for both execution modes.
    out.mean = RVector::Zero(T);
    for (int r = 0; r < R; ++r) out.mean += out.realizations.row(r).transpose();
    out.mean /= R;
    out.standard_error = RVector::Zero(T);
    if (R > 1) {
        for (int r = 0; r < R; ++r) {
            out.standard_error += (out.realizations.row(r).transpose() - out.mean).cwiseAbs2();
        }
        out.standard_error = (out.standard_error / (R - 1) / R).cwiseSqrt();
    }
    return out;
}

}  // namespace chainsim
