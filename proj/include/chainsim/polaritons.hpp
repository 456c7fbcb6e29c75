#pragma once

#include <span>

#include "chainsim/jacobi.hpp"

namespace chainsim {

enum class CouplingSymmetry { symmetric, asymmetric };
enum class PolaritonBranch { upper, lower };

/// Polariton pair of N emitters with nearest-neighbour hopping in a single
/// cavity mode, for uniform (g_j = g) or alternating (g_j = g (-1)^j) couplings.
struct PolaritonSolution {
    CouplingSymmetry symmetry = CouplingSymmetry::symmetric;
    double upper = 0.0;
    double lower = 0.0;
    double photon_upper = 0.0;  ///< beta_+
    double photon_lower = 0.0;  ///< beta_-
    RVector matter_upper;       ///< c_j+, j = 1..N
    RVector matter_lower;       ///< c_j-
    int dark_count = 0;         ///< N - 1
};

/// Closed-form energies omega +/- hopping + sqrt(g^2 N + hopping^2) and eigenvectors.
/// The alternating case requires even N.
PolaritonSolution polariton_solution(double g, int emitters, double hopping, double omega,
                                     CouplingSymmetry symmetry);

/// Detuning of the selected polariton from the bare emitter frequency.
double matched_detuning(double g, int emitters, double hopping, CouplingSymmetry symmetry,
                        PolaritonBranch branch);

/// g_j over j = 1..N for the given symmetry.
std::vector<double> coupling_pattern(double g, int emitters, CouplingSymmetry symmetry);

/// Real symmetric (N+1)x(N+1) Hamiltonian of the closed cavity system: the
/// N-site hopping block, the coupling column and the cavity frequency.
/// `detunings` (optional) shifts the emitter diagonal.
RMatrix tavis_cummings_hamiltonian(int emitters, double hopping, double omega,
                                   double cavity_frequency, std::span<const double> couplings,
                                   Boundary boundary, std::span<const double> detunings = {});

struct PolaritonSpectrum {
    RVector energies;          ///< ascending
    RVector photon_fraction;   ///< |beta^(n)|^2
    RMatrix vectors;           ///< columns: (c_1..c_N, beta)
};

/// Full spectrum of a closed cavity Hamiltonian by Jacobi rotations.
/// Throws PhysicsError for non-symmetric input.
PolaritonSpectrum numeric_eigensystem(const RMatrix& hamiltonian);

std::string to_string(CouplingSymmetry s);

}  // namespace chainsim
