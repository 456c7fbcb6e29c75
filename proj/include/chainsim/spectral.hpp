#pragma once

#include "chainsim/types.hpp"

namespace chainsim {

/// Analytic eigenbasis of the nearest-neighbour Toeplitz hopping matrix.
///
/// Periodic chains use plane waves V(j,k) = exp(-i j k theta)/sqrt(S) with
/// theta = 2 pi / S and k = 0..S-1. Open chains use standing waves
/// V(j,k) = sqrt(2/(S+1)) sin(theta j k) with theta = pi/(S+1) and k = 1..S.
/// Site labels j run from 1 to S in both cases; column c of V holds mode
/// k = first_mode + c.
struct ModeBasis {
    int sites = 0;
    Boundary boundary = Boundary::open;
    double theta = 0.0;
    int first_mode = 1;
    CMatrix V;

    int mode(int column) const { return first_mode + column; }
    int column(int mode) const { return mode - first_mode; }
    /// Quasimomentum k * theta of a column.
    double quasimomentum(int column) const { return theta * mode(column); }
};

/// Collective energies and decay rates, indexed like the columns of V.
struct CollectiveSpectrum {
    RVector energies;
    RVector rates;
};

ModeBasis mode_basis(int sites, Boundary boundary);

/// E_k = omega + 2 hopping cos(k theta).
RVector dispersion(const ModeBasis& basis, double omega, double hopping);

/// Gamma_k = sum_{jj'} conj(V_jk) gamma_jj' V_j'k.
RVector collective_rates(const ModeBasis& basis, const RMatrix& gamma);

/// Fraction of modes with Gamma_k strictly above `gamma`.
double superradiant_fraction(const RVector& rates, double gamma = 1.0);

/// beta_tilde = V^{-1} beta. Throws PhysicsError on dimension mismatch.
CVector to_collective(const ModeBasis& basis, const CVector& beta);
CVector from_collective(const ModeBasis& basis, const CVector& beta_tilde);

}  // namespace chainsim
