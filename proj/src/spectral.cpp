#include "chainsim/spectral.hpp"

#include <cmath>

#include "chainsim/kernels.hpp"

namespace chainsim {

ModeBasis mode_basis(int sites, Boundary boundary) {
    if (sites < 2) throw PhysicsError("mode_basis: at least two sites required");
    ModeBasis basis;
    basis.sites = sites;
    basis.boundary = boundary;
    basis.V.resize(sites, sites);
    if (boundary == Boundary::periodic) {
        basis.theta = 2.0 * pi / sites;
        basis.first_mode = 0;
        const double norm = 1.0 / std::sqrt(static_cast<double>(sites));
        for (int c = 0; c < sites; ++c) {
            const int k = basis.mode(c);
            for (int j = 1; j <= sites; ++j) {
                // Reduce j*k modulo S before the multiply to keep the phase exact.
                const long long jk = (static_cast<long long>(j) * k) % sites;
                basis.V(j - 1, c) = std::polar(norm, -basis.theta * static_cast<double>(jk));
            }
        }
    } else {
        basis.theta = pi / (sites + 1);
        basis.first_mode = 1;
        const double norm = std::sqrt(2.0 / (sites + 1));
        for (int c = 0; c < sites; ++c) {
            const int k = basis.mode(c);
            for (int j = 1; j <= sites; ++j) {
                const long long jk = (static_cast<long long>(j) * k) % (2 * (sites + 1));
                basis.V(j - 1, c) = norm * std::sin(basis.theta * static_cast<double>(jk));
            }
        }
    }
    return basis;
}

RVector dispersion(const ModeBasis& basis, double omega, double hopping) {
    RVector e(basis.sites);
    for (int c = 0; c < basis.sites; ++c) {
        e(c) = omega + 2.0 * hopping * std::cos(basis.quasimomentum(c));
    }
    return e;
}

RVector collective_rates(const ModeBasis& basis, const RMatrix& gamma) {
    if (gamma.rows() != basis.sites || gamma.cols() != basis.sites) {
        throw PhysicsError("collective_rates: gamma dimension does not match basis");
    }
    return kernels::parallel::collective_rates(basis.V, gamma);
}

double superradiant_fraction(const RVector& rates, double gamma) {
    if (rates.size() == 0) return 0.0;
    Eigen::Index count = 0;
    for (Eigen::Index k = 0; k < rates.size(); ++k) {
        if (rates(k) > gamma) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(rates.size());
}

CVector to_collective(const ModeBasis& basis, const CVector& beta) {
    if (beta.size() != basis.sites) {
        throw PhysicsError("to_collective: amplitude length does not match basis");
    }
    // V is unitary in both boundary conventions, so V^{-1} = V^dagger.
    return basis.V.adjoint() * beta;
}

CVector from_collective(const ModeBasis& basis, const CVector& beta_tilde) {
    if (beta_tilde.size() != basis.sites) {
        throw PhysicsError("from_collective: amplitude length does not match basis");
    }
    return basis.V * beta_tilde;
}

}  // namespace chainsim
