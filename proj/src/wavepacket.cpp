#include "chainsim/wavepacket.hpp"

#include <algorithm>
#include <cmath>

namespace chainsim {

GaussianProfile gaussian_profile(const WavepacketSpec& spec, int sites) {
    if (!(spec.width > 0.0)) throw PhysicsError("gaussian_profile: width must be positive");
    GaussianProfile out;
    out.f.resize(sites);
    const double peak = std::pow(2.0 * pi, -0.25) / std::sqrt(spec.width);
    for (int j = 1; j <= sites; ++j) {
        const double d = j - spec.center;
        out.f(j - 1) = peak * std::exp(-d * d / (4.0 * spec.width * spec.width));
    }
    const double margin = 5.0 * spec.width;
    out.near_edge = spec.center - 1.0 < margin || sites - spec.center < margin;
    return out;
}

CVector drive_initialize(const WavepacketSpec& spec, std::span<const double> detunings,
                         int sites, double hopping) {
    if (!detunings.empty() && static_cast<int>(detunings.size()) != sites) {
        throw PhysicsError("drive_initialize: detuning count does not match the chain");
    }
    if (spec.initial_population() > 0.1) {
        throw PhysicsError("drive_initialize: weak-excitation condition 4(eta0 T)^2 <= 0.1 violated");
    }
    if (spec.pulse_duration * std::abs(hopping) >= 1.0) {
        throw PhysicsError("drive_initialize: pulse must be shorter than 1/hopping");
    }
    const RVector f = gaussian_profile(spec, sites).f;
    const cplx beta0 = 2.0 * I * spec.drive_amplitude * spec.pulse_duration;
    CVector beta(sites);
    for (int j = 1; j <= sites; ++j) {
        double sinc = 1.0;
        if (!detunings.empty()) {
            const double x = 0.5 * detunings[static_cast<size_t>(j - 1)] * spec.pulse_duration;
            if (x != 0.0) sinc = std::sin(x) / x;
        }
        beta(j - 1) = beta0 * f(j - 1) * sinc * std::polar(1.0, -spec.quasimomentum * j);
    }
    return beta;
}

double analytic_width(double width, double hopping, double quasimomentum, double t) {
    const double spread = hopping * t * std::cos(quasimomentum) / (width * width);
    return width * std::sqrt(1.0 + spread * spread);
}

double analytic_center(double center, double hopping, double quasimomentum, double t) {
    return center + 2.0 * hopping * t * std::sin(quasimomentum);
}

RVector analytic_evolution(const WavepacketSpec& spec, double hopping, double gamma, double t,
                           int sites) {
    const double w = analytic_width(spec.width, hopping, spec.quasimomentum, t);
    const double c = analytic_center(spec.center, hopping, spec.quasimomentum, t);
    const double amp = spec.initial_population() * std::exp(-gamma * t) / (std::sqrt(2.0 * pi) * w);
    RVector p(sites);
    for (int j = 1; j <= sites; ++j) {
        const double d = j - c;
        p(j - 1) = amp * std::exp(-d * d / (2.0 * w * w));
    }
    return p;
}

CollectiveOccupancy collective_occupancy(const WavepacketSpec& spec, const ModeBasis& basis) {
    const int s = basis.sites;
    const RVector f = gaussian_profile(spec, s).f;
    CVector beta(s);
    for (int j = 1; j <= s; ++j) beta(j - 1) = f(j - 1) * std::polar(1.0, -spec.quasimomentum * j);

    CollectiveOccupancy out;
    out.occupancy = to_collective(basis, beta).cwiseAbs2();

    double q = std::fmod(spec.quasimomentum, 2.0 * pi);
    if (q < 0.0) q += 2.0 * pi;
    // Standing waves cannot tell q from -q: fold into [0, pi].
    if (basis.boundary == Boundary::open && q > pi) q = 2.0 * pi - q;
    out.predicted_center = q / basis.theta;
    out.predicted_width = 1.0 / (2.0 * basis.theta * spec.width);

    const bool continuum = spec.width >= 1.0 && 10.0 * spec.width <= s;
    bool separated = true;
    if (basis.boundary == Boundary::open) {
        const double reach = 3.0 * out.predicted_width;
        separated = out.predicted_center - reach >= 1.0 &&
                    out.predicted_center + reach <= static_cast<double>(s);
    }
    out.valid = continuum && separated;

    // Moments over a window around the dominant lobe.
    Eigen::Index peak_col = 0;
    out.occupancy.maxCoeff(&peak_col);
    const int half = static_cast<int>(std::ceil(6.0 * out.predicted_width)) + 1;
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    std::vector<std::pair<double, double>> window;  // (offset from peak, value)
    for (int d = -half; d <= half; ++d) {
        int c = static_cast<int>(peak_col) + d;
        if (basis.boundary == Boundary::periodic) {
            c = ((c % s) + s) % s;
        } else if (c < 0 || c >= s) {
            continue;
        }
        const double v = out.occupancy(c);
        window.emplace_back(d, v);
        m0 += v;
        m1 += v * d;
    }
    const double mean = m1 / m0;
    for (const auto& [d, v] : window) m2 += v * (d - mean) * (d - mean);
    out.width = std::sqrt(m2 / m0);
    double center = basis.mode(static_cast<int>(peak_col)) + mean;
    if (basis.boundary == Boundary::periodic) center = std::fmod(center + s, static_cast<double>(s));
    out.center = center;

    const double amp = m0 / (std::sqrt(2.0 * pi) * out.width);
    double worst = 0.0;
    for (const auto& [d, v] : window) {
        const double z = (d - mean) / out.width;
        worst = std::max(worst, std::abs(v - amp * std::exp(-0.5 * z * z)));
    }
    out.fit_residual = worst / out.occupancy(peak_col);
    return out;
}

PacketMoments centroid_and_width(std::span<const double> populations) {
    double m0 = 0.0, m1 = 0.0;
    for (size_t n = 0; n < populations.size(); ++n) {
        const double p = populations[n];
        if (p < -1e-12) throw PhysicsError("centroid_and_width: negative population");
        const double v = std::max(p, 0.0);
        m0 += v;
        m1 += v * static_cast<double>(n + 1);
    }
    if (!(m0 > 0.0)) throw PhysicsError("centroid_and_width: zero total population");
    const double mean = m1 / m0;
    double m2 = 0.0;
    for (size_t n = 0; n < populations.size(); ++n) {
        const double d = static_cast<double>(n + 1) - mean;
        m2 += std::max(populations[n], 0.0) * d * d;
    }
    return {mean, std::sqrt(m2 / m0)};
}

PacketMoments centroid_and_width(const RVector& populations) {
    return centroid_and_width(std::span<const double>(populations.data(),
                                                      static_cast<size_t>(populations.size())));
}

}  // namespace chainsim
