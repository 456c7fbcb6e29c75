#pragma once

#include "chainsim/types.hpp"

namespace chainsim {

/// Equidistant chain of identical emitters. Lengths are in units of the
/// transition wavelength, angles in radians.
struct EmitterGeometry {
    int sites = 2;
    double spacing = 0.08;              ///< a / lambda
    double dipole_angle = pi / 2.0;     ///< angle between dipole and chain axis
    Boundary boundary = Boundary::open;

    void validate() const;
};

/// Coherent (omega) and dissipative (gamma) couplings, in units of the
/// single-emitter decay rate.
struct CouplingMatrices {
    RMatrix omega;
    RMatrix gamma;
    Truncation truncation = Truncation::nearest_neighbor;
    DecayModel decay_model = DecayModel::independent;
};

/// Vacuum-induced exchange rate between two emitters a distance `r` apart.
/// Throws PhysicsError for r <= 0 where the kernel diverges.
double dipole_shift(double r, double theta, double gamma = 1.0);

/// Mutual decay rate at separation `r`. Finite at r = 0, where it equals
/// `gamma`; small separations use a series to avoid cancellation.
double mutual_decay(double r, double theta, double gamma = 1.0);

/// Separation of sites i and j (0-based) entering the kernels. Periodic
/// chains use the minimum image.
double site_distance(const EmitterGeometry& geom, int i, int j);

CouplingMatrices build_coupling_matrices(const EmitterGeometry& geom,
                                         Truncation truncation,
                                         DecayModel decay_model,
                                         double gamma = 1.0);

}  // namespace chainsim
