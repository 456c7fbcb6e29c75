#include "chainsim/polaritons.hpp"

#include <cmath>

namespace chainsim {

std::string to_string(CouplingSymmetry s) {
    return s == CouplingSymmetry::symmetric ? "symmetric" : "asymmetric";
}

std::vector<double> coupling_pattern(double g, int emitters, CouplingSymmetry symmetry) {
    std::vector<double> out(static_cast<size_t>(emitters), g);
    if (symmetry == CouplingSymmetry::asymmetric) {
        for (int j = 1; j <= emitters; ++j) {
            if (j % 2) out[static_cast<size_t>(j - 1)] = -g;
        }
    }
    return out;
}

PolaritonSolution polariton_solution(double g, int emitters, double hopping, double omega,
                                     CouplingSymmetry symmetry) {
    if (emitters < 2) throw PhysicsError("polariton_solution: need at least two emitters");
    if (!(g > 0.0)) throw PhysicsError("polariton_solution: coupling must be positive");
    if (symmetry == CouplingSymmetry::asymmetric && emitters % 2) {
        throw PhysicsError("polariton_solution: alternating couplings need even N");
    }
    const double n = emitters;
    const double shift = symmetry == CouplingSymmetry::symmetric ? hopping : -hopping;
    const double root = std::sqrt(g * g * n + hopping * hopping);

    PolaritonSolution sol;
    sol.symmetry = symmetry;
    sol.upper = omega + shift + root;
    sol.lower = omega + shift - root;
    sol.dark_count = emitters - 1;

    const auto fill = [&](double energy, double& photon, RVector& matter) {
        const double d = energy - omega;
        const double denom = std::sqrt(d * d + g * g * n);
        photon = g * std::sqrt(n) / denom;
        matter.resize(emitters);
        const double c = d / (std::sqrt(n) * denom);
        for (int j = 1; j <= emitters; ++j) {
            const double sign = symmetry == CouplingSymmetry::asymmetric && (j % 2) ? -1.0 : 1.0;
            matter(j - 1) = sign * c;
        }
    };
    fill(sol.upper, sol.photon_upper, sol.matter_upper);
    fill(sol.lower, sol.photon_lower, sol.matter_lower);
    return sol;
}

double matched_detuning(double g, int emitters, double hopping, CouplingSymmetry symmetry,
                        PolaritonBranch branch) {
    const double shift = symmetry == CouplingSymmetry::symmetric ? hopping : -hopping;
    const double root = std::sqrt(g * g * emitters + hopping * hopping);
    return branch == PolaritonBranch::upper ? shift + root : shift - root;
}

RMatrix tavis_cummings_hamiltonian(int emitters, double hopping, double omega,
                                   double cavity_frequency, std::span<const double> couplings,
                                   Boundary boundary, std::span<const double> detunings) {
    if (static_cast<int>(couplings.size()) != emitters) {
        throw PhysicsError("tavis_cummings_hamiltonian: one coupling per emitter required");
    }
    if (!detunings.empty() && static_cast<int>(detunings.size()) != emitters) {
        throw PhysicsError("tavis_cummings_hamiltonian: one detuning per emitter required");
    }
    RMatrix h = RMatrix::Zero(emitters + 1, emitters + 1);
    for (int j = 0; j < emitters; ++j) {
        h(j, j) = omega + (detunings.empty() ? 0.0 : detunings[static_cast<size_t>(j)]);
        if (j + 1 < emitters) h(j, j + 1) = h(j + 1, j) = hopping;
        h(j, emitters) = h(emitters, j) = couplings[static_cast<size_t>(j)];
    }
    if (boundary == Boundary::periodic && emitters > 2) {
        h(0, emitters - 1) = h(emitters - 1, 0) = hopping;
    }
    h(emitters, emitters) = cavity_frequency;
    return h;
}

PolaritonSpectrum numeric_eigensystem(const RMatrix& hamiltonian) {
    const SymmetricEigensystem es = jacobi_eigensystem(hamiltonian);
    PolaritonSpectrum out;
    out.energies = es.values;
    out.vectors = es.vectors;
    out.photon_fraction = es.vectors.row(es.vectors.rows() - 1).transpose().cwiseAbs2();
    return out;
}

}  // namespace chainsim
