#include "chainsim/entanglement.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "chainsim/wavepacket.hpp"

namespace chainsim {

EntangledPair entangled_pair_state(double center, double separation, double width,
                                   double quasimomentum, int sites) {
    if (!(width > 0.0)) throw PhysicsError("entangled_pair_state: width must be positive");
    WavepacketSpec a;
    a.center = center;
    a.width = width;
    WavepacketSpec b = a;
    b.center = center + separation;
    const RVector fa = gaussian_profile(a, sites).f;
    const RVector fb = gaussian_profile(b, sites).f;

    EntangledPair out;
    out.overlapping = separation <= 5.0 * width;
    out.state.sites.resize(sites);
    for (int j = 1; j <= sites; ++j) {
        out.state.sites(j - 1) =
            std::polar(1.0 / std::sqrt(2.0), quasimomentum * j) * (fa(j - 1) + fb(j - 1));
    }
    const double n = out.state.sites.norm();
    if (!(n > 0.0)) throw PhysicsError("entangled_pair_state: packets lie outside the chain");
    out.state.sites /= n;
    out.state.ground = 0.0;
    return out;
}

namespace {

void check_labels(int j, int jp, int sites) {
    if (j == jp) throw PhysicsError("reduced_two_site: sites must differ");
    if (j < 1 || jp < 1 || j > sites || jp > sites) {
        throw PhysicsError("reduced_two_site: site label out of range");
    }
}

}  // namespace

TwoSiteReducedDensity reduced_two_site(const ExcitationDensity& rho, int j, int jp) {
    const int dim = static_cast<int>(rho.excited.rows());
    check_labels(j, jp, dim);
    const int a = j - 1;
    const int b = jp - 1;
    TwoSiteReducedDensity red;
    red.j = j;
    red.jp = jp;
    const double pa = rho.excited(a, a).real();
    const double pb = rho.excited(b, b).real();
    // Everything outside {j, j'} (other emitters, the photon) joins |0 0>.
    red.rho(0, 0) = rho.ground + rho.excited_trace() - pa - pb;
    red.rho(0, 1) = rho.ground_coherence(a);
    red.rho(0, 2) = rho.ground_coherence(b);
    red.rho(1, 0) = std::conj(red.rho(0, 1));
    red.rho(2, 0) = std::conj(red.rho(0, 2));
    red.rho(1, 1) = pa;
    red.rho(2, 2) = pb;
    red.rho(1, 2) = rho.excited(a, b);
    red.rho(2, 1) = std::conj(rho.excited(a, b));
    return red;
}

TwoSiteReducedDensity reduced_two_site(const PureExcitationState& state, int j, int jp) {
    const int dim = static_cast<int>(state.sites.size());
    check_labels(j, jp, dim);
    const cplx ca = state.sites(j - 1);
    const cplx cb = state.sites(jp - 1);
    TwoSiteReducedDensity red;
    red.j = j;
    red.jp = jp;
    red.rho(0, 0) = state.norm_squared() - std::norm(ca) - std::norm(cb);
    red.rho(0, 1) = state.ground * std::conj(ca);
    red.rho(0, 2) = state.ground * std::conj(cb);
    red.rho(1, 0) = std::conj(red.rho(0, 1));
    red.rho(2, 0) = std::conj(red.rho(0, 2));
    red.rho(1, 1) = std::norm(ca);
    red.rho(2, 2) = std::norm(cb);
    red.rho(1, 2) = ca * std::conj(cb);
    red.rho(2, 1) = std::conj(red.rho(1, 2));
    return red;
}

namespace {

Eigen::Matrix4cd spin_flip() {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy;
}

Eigen::Matrix4cd guarded(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
        throw PhysicsError("concurrence: reduced density is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho);
    const Eigen::Vector4d ev = es.eigenvalues();
    if (ev.minCoeff() < -1e-8) throw PhysicsError("concurrence: reduced density is not positive");
    if (ev.minCoeff() >= 0.0) return rho;
    return es.eigenvectors() * ev.cwiseMax(0.0).asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

std::array<double, 4> wootters_eigenvalues(const TwoSiteReducedDensity& red) {
    const Eigen::Matrix4cd rho = guarded(red.rho);
    const Eigen::Matrix4cd yy = spin_flip();
    const Eigen::Matrix4cd lambda = rho * yy * rho.conjugate() * yy;

    // Faddeev-LeVerrier: p(x) = x^4 + c[3] x^3 + c[2] x^2 + c[1] x + c[0].
    // Extended precision: a root near zero enters the concurrence through its
    // square root, so double rounding (1e-17) would show up as 3e-9.
    using lcplx = std::complex<long double>;
    using LMatrix = Eigen::Matrix<lcplx, 4, 4>;
    const LMatrix rl = rho.cast<lcplx>();
    const LMatrix yl = yy.cast<lcplx>();
    const LMatrix ll = rl * yl * rl.conjugate() * yl;
    std::array<lcplx, 4> c{};
    LMatrix m = LMatrix::Zero();
    lcplx prev = 1.0L;
    for (int k = 1; k <= 4; ++k) {
        m = ll * m + prev * LMatrix::Identity();
        prev = -(ll * m).trace() / static_cast<long double>(k);
        c[static_cast<size_t>(4 - k)] = prev;
    }

    std::array<double, 4> out{};
    if (std::abs(c[1]) < 1e-13L && std::abs(c[0]) < 1e-13L) {
        // Two exact zero roots: p(x) = x^2 (x^2 + c3 x + c2). Solving for the
        // small pair from the rounding residue in c1, c0 would turn noise into
        // spurious roots, so they stay 0. The smaller quadratic root comes from
        // Vieta's product to avoid cancellation.
        const lcplx disc = std::sqrt(c[3] * c[3] - 4.0L * c[2]);
        const lcplx big = 0.5L * (-c[3] + disc);
        out[0] = static_cast<double>(big.real());
        out[1] = std::abs(big) > 0.0L ? static_cast<double>((c[2] / big).real()) : 0.0;
    } else {
        Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(lambda, false);
        for (int k = 0; k < 4; ++k) out[static_cast<size_t>(k)] = es.eigenvalues()(k).real();
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

double concurrence(const TwoSiteReducedDensity& red, ConcurrenceMethod method) {
    if (method == ConcurrenceMethod::closed_form) {
        const double p = std::sqrt(std::max(0.0, red.population_j() * red.population_jp()));
        const double c = std::abs(red.coherence());
        return std::abs(p + c) - std::abs(p - c);
    }
    const auto ev = wootters_eigenvalues(red);
    const auto root = [](double x) { return std::sqrt(std::max(0.0, x)); };
    return std::max(0.0, root(ev[0]) - root(ev[1]) - root(ev[2]) - root(ev[3]));
}

namespace {

struct Window {
    int first = 1;
    int last = 0;  // inclusive; empty when last < first
};

Window centred_window(double centre, int count, int sites) {
    const int first = static_cast<int>(std::lround(centre - 0.5 * (count - 1)));
    return {std::max(first, 1), std::min(first + count - 1, sites)};
}

}  // namespace

ConcurrenceSeries average_concurrence(const DensityTrajectory& trajectory, int sites,
                                      const DomainSpec& domains) {
    if (!(domains.first_center < domains.second_center)) {
        throw PhysicsError("average_concurrence: first domain must lie left of the second");
    }
    const size_t nt = trajectory.states.size();
    ConcurrenceSeries out;
    out.times = trajectory.times;
    out.average = RVector::Zero(static_cast<Eigen::Index>(nt));
    out.width = RVector::Zero(static_cast<Eigen::Index>(nt));
    out.first_center = RVector::Zero(static_cast<Eigen::Index>(nt));
    out.second_center = RVector::Zero(static_cast<Eigen::Index>(nt));

    // Centroid tracking is sequential; the pair sums below are not.
    std::vector<std::pair<Window, Window>> windows(nt);
    double ca = domains.first_center;
    double cb = domains.second_center;
    for (size_t n = 0; n < nt; ++n) {
        const RVector p = trajectory.states[n].populations().head(sites);
        const int split = static_cast<int>(std::floor(0.5 * (ca + cb)));
        if (split < 1 || split >= sites) throw PhysicsError("average_concurrence: packets left the chain");
        const PacketMoments ma = centroid_and_width(RVector(p.head(split)));
        const PacketMoments mb = centroid_and_width(RVector(p.tail(sites - split)));
        ca = ma.centroid;
        cb = mb.centroid + split;
        const double w = 0.5 * (ma.width + mb.width);
        const int count = static_cast<int>(std::ceil(5.0 * w - 1e-9));
        Window a = centred_window(ca, count, sites);
        Window b = centred_window(cb, count, sites);
        if (a.last >= b.first) {
            // Shared sites belong to neither domain.
            const int lo = b.first;
            const int hi = a.last;
            a.last = lo - 1;
            b.first = hi + 1;
        }
        if (a.last < a.first || b.last < b.first) {
            throw PhysicsError("average_concurrence: a domain is empty");
        }
        windows[n] = {a, b};
        out.width(static_cast<Eigen::Index>(n)) = w;
        out.first_center(static_cast<Eigen::Index>(n)) = ca;
        out.second_center(static_cast<Eigen::Index>(n)) = cb;
    }

#pragma omp parallel for schedule(dynamic)
    for (long long n = 0; n < static_cast<long long>(nt); ++n) {
        const ExcitationDensity& rho = trajectory.states[static_cast<size_t>(n)];
        const auto& [a, b] = windows[static_cast<size_t>(n)];
        double sum = 0.0;
        for (int j = a.first; j <= a.last; ++j) {
            for (int jp = b.first; jp <= b.last; ++jp) {
                sum += concurrence(reduced_two_site(rho, j, jp), ConcurrenceMethod::closed_form);
            }
        }
        double norm;
        if (domains.normalization == ConcurrenceNormalization::five_width) {
            norm = 5.0 * out.width(n);
        } else {
            norm = static_cast<double>(a.last - a.first + 1) * (b.last - b.first + 1);
        }
        out.average(n) = sum / norm;
    }
    return out;
}

}  // namespace chainsim
