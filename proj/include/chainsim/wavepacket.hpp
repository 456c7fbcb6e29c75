#pragma once

#include <span>

#include "chainsim/spectral.hpp"

namespace chainsim {

/// Gaussian wavepacket written onto the chain by a short tilted pulse.
struct WavepacketSpec {
    double center = 55.0;          ///< j0, site label (1-based, may be fractional)
    double width = 5.0;            ///< w, in sites
    double quasimomentum = pi / 2; ///< q0, phase step per site
    double drive_amplitude = 5.0;  ///< eta0
    double pulse_duration = 0.01;  ///< T

    /// |beta0|^2 = 4 (eta0 T)^2, the resonant total population.
    double initial_population() const {
        const double a = drive_amplitude * pulse_duration;
        return 4.0 * a * a;
    }
};

struct GaussianProfile {
    RVector f;               ///< f_j for j = 1..S
    bool near_edge = false;  ///< center closer than 5w to either end
};

/// f_j = (2 pi)^{-1/4} w^{-1/2} exp(-(j-j0)^2 / (4 w^2)).
GaussianProfile gaussian_profile(const WavepacketSpec& spec, int sites);

/// beta_j(0) = 2 i eta0 T f_j sinc(Delta_j T / 2) exp(-i q0 j).
///
/// `detunings` may be empty (resonant drive). Throws PhysicsError when the
/// total population exceeds 0.1 or the pulse is not short against 1/|hopping|.
CVector drive_initialize(const WavepacketSpec& spec, std::span<const double> detunings,
                         int sites, double hopping = 0.0);

/// Closed-form populations |beta_j(t)|^2 of a Gaussian packet under the
/// quadratic dispersion expansion, for j = 1..sites.
RVector analytic_evolution(const WavepacketSpec& spec, double hopping, double gamma,
                           double t, int sites);

/// Packet width under the quadratic dispersion expansion.
double analytic_width(double width, double hopping, double quasimomentum, double t);
/// Packet centre under the quadratic dispersion expansion.
double analytic_center(double center, double hopping, double quasimomentum, double t);

struct CollectiveOccupancy {
    RVector occupancy;         ///< |beta_tilde_k|^2 per basis column
    double center = 0.0;       ///< fitted k0 (mode index)
    double width = 0.0;        ///< fitted width in mode-index units
    double predicted_center = 0.0;
    double predicted_width = 0.0;
    double fit_residual = 0.0; ///< max |occupancy - fitted Gaussian| / peak, on the lobe
    bool valid = false;        ///< continuum assumptions hold and lobes are separated
};

/// Occupancy of collective modes for a packet with unit total population.
CollectiveOccupancy collective_occupancy(const WavepacketSpec& spec, const ModeBasis& basis);

struct PacketMoments {
    double centroid = 0.0;  ///< 1-based site label
    double width = 0.0;     ///< standard deviation in sites
};

/// First and second central moments of a population profile (site labels 1..S).
/// Throws PhysicsError for negative entries or zero total.
PacketMoments centroid_and_width(std::span<const double> populations);
PacketMoments centroid_and_width(const RVector& populations);

}  // namespace chainsim
