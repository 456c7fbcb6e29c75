#include "chainsim/greens.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "chainsim/kernels.hpp"

namespace chainsim {

std::string to_string(Boundary b) { return b == Boundary::open ? "open" : "periodic"; }
std::string to_string(Truncation t) {
    return t == Truncation::full ? "full" : "nearest_neighbor";
}
std::string to_string(DecayModel d) {
    return d == DecayModel::independent ? "independent" : "collective";
}

void EmitterGeometry::validate() const {
    if (sites < 2) throw ConfigError("geometry.sites", "at least two emitters required");
    if (!(spacing > 0.0)) throw ConfigError("geometry.spacing", "must be positive");
    if (dipole_angle < 0.0 || dipole_angle > pi / 2.0 + 1e-15) {
        throw ConfigError("geometry.dipole_angle", "must lie in [0, pi/2]");
    }
}

double dipole_shift(double r, double theta, double gamma) {
    if (!(r > 0.0)) throw PhysicsError("dipole_shift: separation must be positive");
    const double x = 2.0 * pi * r;
    const double c = std::cos(theta);
    const double s2 = 1.0 - c * c;
    const double near = (1.0 - 3.0 * c * c) * (std::sin(x) / (x * x) + std::cos(x) / (x * x * x));
    return 0.75 * gamma * (near - s2 * std::cos(x) / x);
}

namespace {

// Below this kr the closed form loses digits to cancellation in
// cos(x)/x^2 - sin(x)/x^3; the Taylor series is used instead.
constexpr double kSeriesThreshold = 0.5;

// (cos x - sin x / x) / x^2 = sum_{n>=1} (-1)^n 2n x^{2n-2} / (2n+1)!
double near_field_decay_series(double x) {
    const double x2 = x * x;
    double sum = 0.0;
    double power = 1.0;       // x^{2n-2}
    double factorial = 6.0;   // (2n+1)!
    for (int n = 1; n <= 12; ++n) {
        const double term = (n % 2 ? -1.0 : 1.0) * 2.0 * n * power / factorial;
        sum += term;
        power *= x2;
        factorial *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
    }
    return sum;
}

// sin x / x
double sinc_series(double x) {
    const double x2 = x * x;
    double sum = 0.0;
    double power = 1.0;
    double factorial = 1.0;
    for (int n = 0; n <= 12; ++n) {
        sum += (n % 2 ? -1.0 : 1.0) * power / factorial;
        power *= x2;
        factorial *= (2.0 * n + 2.0) * (2.0 * n + 3.0);
    }
    return sum;
}

}  // namespace

double mutual_decay(double r, double theta, double gamma) {
    if (r < 0.0) throw PhysicsError("mutual_decay: separation must be non-negative");
    const double x = 2.0 * pi * r;
    const double c = std::cos(theta);
    const double s2 = 1.0 - c * c;
    double near;
    double far;
    if (x < kSeriesThreshold) {
        near = near_field_decay_series(x);
        far = sinc_series(x);
    } else {
        near = std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
        far = std::sin(x) / x;
    }
    return 1.5 * gamma * ((1.0 - 3.0 * c * c) * near + s2 * far);
}

double site_distance(const EmitterGeometry& geom, int i, int j) {
    int d = std::abs(i - j);
    if (geom.boundary == Boundary::periodic) d = std::min(d, geom.sites - d);
    return geom.spacing * d;
}

CouplingMatrices build_coupling_matrices(const EmitterGeometry& geom,
                                         Truncation truncation,
                                         DecayModel decay_model,
                                         double gamma) {
    geom.validate();
    const int n = geom.sites;
    CouplingMatrices out;
    out.truncation = truncation;
    out.decay_model = decay_model;
    out.omega = RMatrix::Zero(n, n);
    out.gamma = RMatrix::Zero(n, n);

    if (truncation == Truncation::full) {
        kernels::parallel::fill_symmetric(out.omega, 0.0, [&](int i, int j) {
            return dipole_shift(site_distance(geom, i, j), geom.dipole_angle, gamma);
        });
    } else {
        const double nn = dipole_shift(geom.spacing, geom.dipole_angle, gamma);
        for (int i = 0; i + 1 < n; ++i) {
            out.omega(i, i + 1) = nn;
            out.omega(i + 1, i) = nn;
        }
        if (geom.boundary == Boundary::periodic && n > 2) {
            out.omega(0, n - 1) = nn;
            out.omega(n - 1, 0) = nn;
        }
    }

    if (decay_model == DecayModel::collective) {
        kernels::parallel::fill_symmetric(out.gamma, gamma, [&](int i, int j) {
            return mutual_decay(site_distance(geom, i, j), geom.dipole_angle, gamma);
        });
    } else {
        out.gamma.diagonal().setConstant(gamma);
    }
    return out;
}

}  // namespace chainsim
