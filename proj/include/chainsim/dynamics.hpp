#pragma once

#include <optional>
#include <span>
#include <vector>

#include "chainsim/greens.hpp"

namespace chainsim {

/// Single cavity mode coupled to the intracavity block of the chain.
struct CavityMode {
    double frequency = 0.0;            ///< omega_c relative to the emitter frame
    double loss = 0.0;                 ///< kappa
    std::vector<double> couplings;     ///< g_j for the N intracavity sites
};

/// Everything that defines a run. Rates are in units of gamma, times in 1/gamma.
///
/// With a cavity the chain is split into an in-coupling island of
/// `island_sites` (M) emitters, `cavity_sites` (N) intracavity emitters and an
/// out-coupling island of M emitters, so S = N + 2M. The island layout may be
/// kept without a cavity mode to model the same chain in free space.
struct ChainConfig {
    EmitterGeometry geometry;
    double frequency = 0.0;                 ///< omega; runs use the emitter frame (0)
    std::vector<double> detunings;          ///< delta_j; empty means none
    std::optional<double> hopping;          ///< uniform nearest-neighbour Omega; unset = dipole kernel
    Truncation truncation = Truncation::nearest_neighbor;
    DecayModel decay_model = DecayModel::independent;
    double decay_rate = 1.0;

    int island_sites = 0;
    int cavity_sites = 0;
    std::optional<double> cavity_hopping;   ///< hopping inside the intracavity block
    std::optional<double> junction_hopping; ///< island/cavity boundary bonds
    double island_detuning = 0.0;           ///< frequency offset of both islands
    std::optional<CavityMode> cavity;

    int sites() const { return geometry.sites; }
    bool has_cavity() const { return cavity.has_value(); }
    /// Dimension of the excited manifold: S, plus one with a cavity photon.
    int dimension() const { return sites() + (has_cavity() ? 1 : 0); }
    bool has_layout() const { return cavity_sites > 0; }
    /// 0-based index ranges of the three sections.
    int cavity_begin() const { return island_sites; }
    int cavity_end() const { return island_sites + cavity_sites; }

    void validate() const;
};

/// Non-Hermitian single-excitation Hamiltonian Z = Omega - (i/2) gamma + G + diag(omega_j)
/// plus the data the analytic propagator needs.
struct Generator {
    CMatrix Z;
    int sites = 0;
    bool cavity = false;

    // Filled when the chain is a uniform Toeplitz chain (no disorder, no
    // cavity, independent decay, uniform nearest-neighbour hopping).
    bool toeplitz = false;
    Boundary boundary = Boundary::open;
    double omega = 0.0;
    double hopping = 0.0;
    double gamma = 0.0;

    /// Amplitude generator with beta' = -M beta.
    CMatrix M() const { return I * Z; }
    /// Total dissipation matrix i (Z - Z^dagger), including cavity loss.
    RMatrix dissipator() const { return (I * (Z - Z.adjoint())).real(); }
    int dimension() const { return static_cast<int>(Z.rows()); }
};

/// Coherent couplings of the chain: kernel or explicit hopping, with
/// cavity-section overrides applied.
RMatrix coherent_couplings(const ChainConfig& config);

Generator build_amplitude_generator(const ChainConfig& config);

enum class Method { expm, rk4, spectral };

struct Rk4Options {
    /// Step is step_scale / max|Z_ij|.
    double step_scale = 1e-3;
};

struct AmplitudeTrajectory {
    std::vector<double> times;
    std::vector<CVector> states;

    /// Row per time, column per component.
    RMatrix populations() const;
    RVector norms() const;
};

/// Propagates beta' = -i Z beta, sampled at `times` (non-decreasing, >= 0;
/// the initial state is taken at t = 0). The spectral method requires a
/// Toeplitz generator and throws PhysicsError otherwise.
AmplitudeTrajectory propagate_amplitudes(const Generator& gen, const CVector& beta0,
                                         std::span<const double> times,
                                         Method method = Method::expm,
                                         Rk4Options rk4 = {});

/// Single-excitation density matrix: ground population, ground-excited
/// coherences rho_Gj and the excited block over sites (and photon).
struct ExcitationDensity {
    double ground = 1.0;
    CVector ground_coherence;
    CMatrix excited;
    double t = 0.0;

    static ExcitationDensity ground_state(int dimension);
    /// |psi><psi| for psi = c_G |G> + sum_j a_j |j>; c_G defaults to fill the norm.
    static ExcitationDensity from_pure(const CVector& amplitudes,
                                       std::optional<cplx> ground_amplitude = std::nullopt);

    double excited_trace() const { return excited.trace().real(); }
    double total_trace() const { return ground + excited_trace(); }
    /// Diagonal of the excited block with round-off negatives clamped to 0.
    RVector populations() const;
    /// Throws PhysicsError if not Hermitian (1e-10) or a diagonal entry is below -1e-12.
    void validate() const;
};

struct DensityTrajectory {
    std::vector<double> times;
    std::vector<ExcitationDensity> states;

    RMatrix populations() const;
};

/// Propagates rho_E' = -i (Z rho_E - rho_E Z^dagger), rho_G' = i Z* rho_G and
/// rho_GG' = tr(Gamma rho_E). Method::spectral is rejected.
DensityTrajectory propagate_density(const Generator& gen, const ExcitationDensity& rho0,
                                    std::span<const double> times,
                                    Method method = Method::expm, Rk4Options rk4 = {});

/// Population on the out-coupling island (sites M+N+1..S) per time.
/// Throws PhysicsError when the chain has no out-coupling island.
RVector transmission(const DensityTrajectory& trajectory, const ChainConfig& config);
RVector transmission(const AmplitudeTrajectory& trajectory, const ChainConfig& config);
/// Same readout applied to a populations matrix (row per time).
RVector transmission(const RMatrix& populations, const ChainConfig& config);

std::string to_string(Method m);

}  // namespace chainsim
