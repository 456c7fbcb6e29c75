#include "chainsim/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "chainsim/kernels.hpp"
#include "chainsim/spectral.hpp"

namespace chainsim {

std::string to_string(Method m) {
    switch (m) {
        case Method::expm: return "expm";
        case Method::rk4: return "rk4";
        case Method::spectral: return "spectral";
    }
    return "unknown";
}

void ChainConfig::validate() const {
    geometry.validate();
    const int s = sites();
    if (!detunings.empty() && static_cast<int>(detunings.size()) != s) {
        throw ConfigError("detunings", "expected " + std::to_string(s) + " entries");
    }
    if (!(decay_rate >= 0.0)) throw ConfigError("decay_rate", "must be non-negative");
    if (island_sites < 0) throw ConfigError("island_sites", "must be non-negative");
    if (cavity_sites < 0) throw ConfigError("cavity_sites", "must be non-negative");
    if (has_layout() && cavity_sites + 2 * island_sites != s) {
        throw ConfigError("cavity_sites", "sites must equal cavity_sites + 2*island_sites");
    }
    if (cavity) {
        if (!has_layout()) throw ConfigError("cavity", "cavity mode requires cavity_sites > 0");
        if (static_cast<int>(cavity->couplings.size()) != cavity_sites) {
            throw ConfigError("cavity.couplings",
                              "expected " + std::to_string(cavity_sites) + " entries");
        }
        if (!(cavity->loss >= 0.0)) throw ConfigError("cavity.loss", "must be non-negative");
    }
    if ((cavity_hopping || junction_hopping) && !has_layout()) {
        throw ConfigError("cavity_hopping", "section hoppings require cavity_sites > 0");
    }
}

RMatrix coherent_couplings(const ChainConfig& config) {
    const int s = config.sites();
    RMatrix omega;
    if (config.hopping) {
        omega = RMatrix::Zero(s, s);
        for (int i = 0; i + 1 < s; ++i) omega(i, i + 1) = omega(i + 1, i) = *config.hopping;
        if (config.geometry.boundary == Boundary::periodic && s > 2) {
            omega(0, s - 1) = omega(s - 1, 0) = *config.hopping;
        }
    } else {
        omega = build_coupling_matrices(config.geometry, config.truncation,
                                        DecayModel::independent, config.decay_rate)
                    .omega;
    }
    if (config.has_layout()) {
        const int b = config.cavity_begin();
        const int e = config.cavity_end();
        if (config.cavity_hopping) {
            for (int i = b; i + 1 < e; ++i) omega(i, i + 1) = omega(i + 1, i) = *config.cavity_hopping;
        }
        if (config.junction_hopping) {
            if (b > 0) omega(b - 1, b) = omega(b, b - 1) = *config.junction_hopping;
            if (e < s) omega(e - 1, e) = omega(e, e - 1) = *config.junction_hopping;
        }
    }
    return omega;
}

Generator build_amplitude_generator(const ChainConfig& config) {
    config.validate();
    const int s = config.sites();
    const int dim = config.dimension();

    const RMatrix omega = coherent_couplings(config);
    const RMatrix gamma = build_coupling_matrices(config.geometry, Truncation::nearest_neighbor,
                                                  config.decay_model, config.decay_rate)
                              .gamma;

    Generator gen;
    gen.sites = s;
    gen.cavity = config.has_cavity();
    gen.Z = CMatrix::Zero(dim, dim);
    gen.Z.topLeftCorner(s, s) = omega.cast<cplx>() - 0.5 * I * gamma.cast<cplx>();
    for (int j = 0; j < s; ++j) {
        double w = config.frequency;
        if (!config.detunings.empty()) w += config.detunings[static_cast<size_t>(j)];
        if (config.has_layout() && (j < config.cavity_begin() || j >= config.cavity_end())) {
            w += config.island_detuning;
        }
        gen.Z(j, j) += w;
    }
    if (config.cavity) {
        const CavityMode& c = *config.cavity;
        gen.Z(s, s) = cplx(c.frequency, -0.5 * c.loss);
        for (int n = 0; n < config.cavity_sites; ++n) {
            const int j = config.cavity_begin() + n;
            gen.Z(j, s) = gen.Z(s, j) = c.couplings[static_cast<size_t>(n)];
        }
    }

    // Toeplitz detection for the analytic propagator.
    const bool clean = std::all_of(config.detunings.begin(), config.detunings.end(),
                                   [](double d) { return d == 0.0; }) &&
                       config.island_detuning == 0.0;
    const bool uniform_hop = !config.cavity_hopping && !config.junction_hopping &&
                             (config.hopping || config.truncation == Truncation::nearest_neighbor);
    if (!gen.cavity && clean && uniform_hop && config.decay_model == DecayModel::independent) {
        gen.toeplitz = true;
        gen.boundary = config.geometry.boundary;
        gen.omega = config.frequency;
        gen.hopping = config.hopping ? *config.hopping
                                     : dipole_shift(config.geometry.spacing,
                                                    config.geometry.dipole_angle, config.decay_rate);
        gen.gamma = config.decay_rate;
    }
    return gen;
}

namespace {

void check_times(std::span<const double> times) {
    double prev = 0.0;
    for (double t : times) {
        if (!(t >= prev)) throw PhysicsError("propagation times must be non-decreasing and >= 0");
        prev = t;
    }
}

/// exp(-i Z dt), recomputed only when the increment changes. Increments of a
/// uniform grid differ in the last bits, so they count as equal within 1e-12
/// relative (a time error far below any sampling resolution).
class StepPropagator {
public:
    explicit StepPropagator(const CMatrix& z) : z_(z) {}

    const CMatrix& operator()(double dt) {
        if (!valid_ || std::abs(dt - dt_) > 1e-12 * dt_) {
            const CMatrix arg = -I * dt * z_;
            u_ = arg.exp();
            dt_ = dt;
            valid_ = true;
        }
        return u_;
    }

private:
    const CMatrix& z_;
    CMatrix u_;
    double dt_ = 0.0;
    bool valid_ = false;
};

int rk4_substeps(const CMatrix& z, double dt, const Rk4Options& opts) {
    const double zmax = std::max(z.cwiseAbs().maxCoeff(), 1e-300);
    const double h = opts.step_scale / zmax;
    return std::max(1, static_cast<int>(std::ceil(dt / h)));
}

}  // namespace

RMatrix AmplitudeTrajectory::populations() const {
    if (states.empty()) return {};
    RMatrix p(static_cast<Eigen::Index>(states.size()), states.front().size());
    for (size_t n = 0; n < states.size(); ++n) {
        p.row(static_cast<Eigen::Index>(n)) = states[n].cwiseAbs2().transpose();
    }
    return p;
}

RVector AmplitudeTrajectory::norms() const {
    RVector v(static_cast<Eigen::Index>(states.size()));
    for (size_t n = 0; n < states.size(); ++n) v(static_cast<Eigen::Index>(n)) = states[n].squaredNorm();
    return v;
}

AmplitudeTrajectory propagate_amplitudes(const Generator& gen, const CVector& beta0,
                                         std::span<const double> times, Method method,
                                         Rk4Options rk4) {
    if (beta0.size() != gen.dimension()) {
        throw PhysicsError("propagate_amplitudes: initial state has wrong dimension");
    }
    check_times(times);
    AmplitudeTrajectory out;
    out.times.assign(times.begin(), times.end());
    out.states.reserve(times.size());

    switch (method) {
        case Method::spectral: {
            if (!gen.toeplitz) {
                throw PhysicsError(
                    "spectral propagation needs a uniform chain with independent decay");
            }
            const ModeBasis basis = mode_basis(gen.sites, gen.boundary);
            const RVector energies = dispersion(basis, gen.omega, gen.hopping);
            const CVector modes = to_collective(basis, beta0);
            for (double t : times) {
                CVector evolved(modes.size());
                for (Eigen::Index k = 0; k < modes.size(); ++k) {
                    evolved(k) = modes(k) * std::exp(cplx(-0.5 * gen.gamma * t, -energies(k) * t));
                }
                out.states.push_back(from_collective(basis, evolved));
            }
            break;
        }
        case Method::expm: {
            StepPropagator step(gen.Z);
            CVector state = beta0;
            double now = 0.0;
            for (double t : times) {
                if (t > now) state = step(t - now) * state;
                now = t;
                out.states.push_back(state);
            }
            break;
        }
        case Method::rk4: {
            const CMatrix A = -I * gen.Z;
            CVector state = beta0;
            double now = 0.0;
            for (double t : times) {
                if (t > now) {
                    const int n = rk4_substeps(gen.Z, t - now, rk4);
                    const double h = (t - now) / n;
                    for (int s = 0; s < n; ++s) {
                        const CVector k1 = A * state;
                        const CVector k2 = A * (state + 0.5 * h * k1);
                        const CVector k3 = A * (state + 0.5 * h * k2);
                        const CVector k4 = A * (state + h * k3);
                        state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                    }
                }
                now = t;
                out.states.push_back(state);
            }
            break;
        }
    }
    return out;
}

ExcitationDensity ExcitationDensity::ground_state(int dimension) {
    ExcitationDensity rho;
    rho.ground = 1.0;
    rho.ground_coherence = CVector::Zero(dimension);
    rho.excited = CMatrix::Zero(dimension, dimension);
    return rho;
}

ExcitationDensity ExcitationDensity::from_pure(const CVector& amplitudes,
                                               std::optional<cplx> ground_amplitude) {
    const double weight = amplitudes.squaredNorm();
    if (weight > 1.0 + 1e-12) throw PhysicsError("from_pure: excited weight exceeds one");
    const cplx cg = ground_amplitude ? *ground_amplitude
                                     : cplx(std::sqrt(std::max(0.0, 1.0 - weight)), 0.0);
    ExcitationDensity rho;
    rho.ground = std::norm(cg);
    rho.excited = amplitudes * amplitudes.adjoint();
    // rho_Gj = <G|rho|j> = c_G conj(a_j)
    rho.ground_coherence = cg * amplitudes.conjugate();
    return rho;
}

RVector ExcitationDensity::populations() const {
    return excited.diagonal().real().cwiseMax(0.0);
}

void ExcitationDensity::validate() const {
    const Eigen::Index n = excited.rows();
    if (excited.cols() != n || ground_coherence.size() != n) {
        throw PhysicsError("density: inconsistent block dimensions");
    }
    if ((excited - excited.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw PhysicsError("density: excited block is not Hermitian");
    }
    if (excited.diagonal().real().minCoeff() < -1e-12 || ground < -1e-12) {
        throw PhysicsError("density: negative population");
    }
}

RMatrix DensityTrajectory::populations() const {
    if (states.empty()) return {};
    RMatrix p(static_cast<Eigen::Index>(states.size()), states.front().excited.rows());
    for (size_t n = 0; n < states.size(); ++n) {
        p.row(static_cast<Eigen::Index>(n)) = states[n].populations().transpose();
    }
    return p;
}

namespace {

struct DensityRates {
    double ground;
    CVector coherence;
    CMatrix excited;
};

void density_derivative(const CMatrix& Z, const CMatrix& Zc, const RMatrix& gamma,
                        const ExcitationDensity& rho, DensityRates& d) {
    kernels::parallel::density_rhs(Z, rho.excited, d.excited);
    d.coherence = I * (Zc * rho.ground_coherence);
    // tr(Gamma rho) with Gamma real symmetric.
    d.ground = (gamma.cast<cplx>().cwiseProduct(rho.excited.transpose())).sum().real();
}

void axpy(ExcitationDensity& y, const ExcitationDensity& x, double h, const DensityRates& d) {
    y.ground = x.ground + h * d.ground;
    y.ground_coherence = x.ground_coherence + h * d.coherence;
    y.excited = x.excited + h * d.excited;
}

}  // namespace

DensityTrajectory propagate_density(const Generator& gen, const ExcitationDensity& rho0,
                                    std::span<const double> times, Method method,
                                    Rk4Options rk4) {
    rho0.validate();
    if (rho0.excited.rows() != gen.dimension()) {
        throw PhysicsError("propagate_density: initial state has wrong dimension");
    }
    if (method == Method::spectral) {
        throw PhysicsError("propagate_density supports expm and rk4 only");
    }
    check_times(times);

    DensityTrajectory out;
    out.times.assign(times.begin(), times.end());
    out.states.reserve(times.size());
    ExcitationDensity state = rho0;
    double now = 0.0;

    if (method == Method::expm) {
        StepPropagator step(gen.Z);
        for (double t : times) {
            if (t > now) {
                const CMatrix& u = step(t - now);
                const double before = state.excited_trace();
                state.excited = u * state.excited * u.adjoint();
                state.ground_coherence = u.conjugate() * state.ground_coherence;
                // Exact integral of rho_GG' = tr(Gamma rho_E) over the step.
                state.ground += before - state.excited_trace();
            }
            now = t;
            state.t = t;
            out.states.push_back(state);
        }
        return out;
    }

    const CMatrix Zc = gen.Z.conjugate();
    const RMatrix gamma = gen.dissipator();
    DensityRates k1, k2, k3, k4;
    ExcitationDensity tmp = state;
    for (double t : times) {
        if (t > now) {
            const int n = rk4_substeps(gen.Z, t - now, rk4);
            const double h = (t - now) / n;
            for (int s = 0; s < n; ++s) {
                density_derivative(gen.Z, Zc, gamma, state, k1);
                axpy(tmp, state, 0.5 * h, k1);
                density_derivative(gen.Z, Zc, gamma, tmp, k2);
                axpy(tmp, state, 0.5 * h, k2);
                density_derivative(gen.Z, Zc, gamma, tmp, k3);
                axpy(tmp, state, h, k3);
                density_derivative(gen.Z, Zc, gamma, tmp, k4);
                state.ground += (h / 6.0) * (k1.ground + 2.0 * k2.ground + 2.0 * k3.ground + k4.ground);
                state.ground_coherence += (h / 6.0) * (k1.coherence + 2.0 * k2.coherence +
                                                       2.0 * k3.coherence + k4.coherence);
                state.excited += (h / 6.0) * (k1.excited + 2.0 * k2.excited +
                                              2.0 * k3.excited + k4.excited);
            }
        }
        now = t;
        state.t = t;
        out.states.push_back(state);
    }
    return out;
}

RVector transmission(const RMatrix& populations, const ChainConfig& config) {
    if (!config.has_layout() || config.island_sites == 0) {
        throw PhysicsError("transmission: chain has no out-coupling island");
    }
    const int first = config.cavity_end();
    const int count = config.sites() - first;
    return populations.middleCols(first, count).rowwise().sum();
}

RVector transmission(const DensityTrajectory& trajectory, const ChainConfig& config) {
    return transmission(trajectory.populations(), config);
}

RVector transmission(const AmplitudeTrajectory& trajectory, const ChainConfig& config) {
    return transmission(trajectory.populations(), config);
}

}  // namespace chainsim
