// Serial reference kernels against their OpenMP counterparts.
//
//   bench_kernels [sites] [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include <omp.h>

#include "chainsim/kernels.hpp"
#include "chainsim/spectral.hpp"
#include "chainsim/transport.hpp"

using namespace chainsim;

namespace {

double time_ms(const std::function<void()>& fn, int repeats) {
    fn();  // warm-up
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < repeats; ++r) fn();
    const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() / repeats;
}

void row(const char* name, double serial, double parallel, double diff) {
    std::printf("%-18s %12.3f %12.3f %8.2fx %12.3g\n", name, serial, parallel, serial / parallel, diff);
}

}  // namespace

int main(int argc, char** argv) {
    const int sites = argc > 1 ? std::atoi(argv[1]) : 400;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    if (sites < 2 || repeats < 1) {
        std::fprintf(stderr, "usage: bench_kernels [sites>=2] [repeats>=1]\n");
        return 1;
    }
    std::printf("sites=%d repeats=%d threads=%d\n", sites, repeats, omp_get_max_threads());
    std::printf("%-18s %12s %12s %9s %12s\n", "kernel", "serial ms", "parallel ms", "speedup", "max |diff|");

    const EmitterGeometry geom{sites, 0.08, pi / 2, Boundary::open};
    const auto pair = [&](int i, int j) {
        return mutual_decay(site_distance(geom, i, j), geom.dipole_angle);
    };
    RMatrix gs(sites, sites), gp(sites, sites);
    const double ts = time_ms([&] { kernels::reference::fill_symmetric(gs, 1.0, pair); }, repeats);
    const double tp = time_ms([&] { kernels::parallel::fill_symmetric(gp, 1.0, pair); }, repeats);
    row("fill_symmetric", ts, tp, (gs - gp).cwiseAbs().maxCoeff());

    ChainConfig chain;
    chain.geometry = geom;
    chain.decay_model = DecayModel::collective;
    const Generator gen = build_amplitude_generator(chain);
    WavepacketSpec packet;
    packet.center = 0.5 * (sites + 1);
    packet.width = std::max(1.0, sites / 20.0);
    const CMatrix rho = ExcitationDensity::from_pure(launch_state(chain, packet)).excited;
    CMatrix rs, rp;
    const double rs_t = time_ms([&] { kernels::reference::density_rhs(gen.Z, rho, rs); }, repeats);
    const double rp_t = time_ms([&] { kernels::parallel::density_rhs(gen.Z, rho, rp); }, repeats);
    row("density_rhs", rs_t, rp_t, (rs - rp).cwiseAbs().maxCoeff());

    const ModeBasis basis = mode_basis(sites, Boundary::open);
    RVector cs, cp;
    const double cs_t = time_ms([&] { cs = kernels::reference::collective_rates(basis.V, gs); }, repeats);
    const double cp_t = time_ms([&] { cp = kernels::parallel::collective_rates(basis.V, gs); }, repeats);
    row("collective_rates", cs_t, cp_t, (cs - cp).cwiseAbs().maxCoeff());

    // Disorder ensemble on a small island/cavity/island chain.
    ChainConfig cav;
    cav.geometry = {60, 0.08, pi / 2, Boundary::open};
    cav.hopping = 5.0;
    cav.island_sites = 15;
    cav.cavity_sites = 30;
    cav.cavity = CavityMode{0.0, 1.0, std::vector<double>(30, 20.0)};
    WavepacketSpec p;
    p.center = 8.0;
    p.width = 2.0;
    const DisorderSpec d{DisorderDistribution::uniform, 5.0, 32, 7};
    const auto times = uniform_times(5.0, 50);
    EnsembleResult es, ep;
    const double es_t = time_ms([&] { es = disorder_ensemble(cav, p, d, times, Execution::serial); }, 1);
    const double ep_t = time_ms([&] { ep = disorder_ensemble(cav, p, d, times, Execution::parallel); }, 1);
    row("disorder_ensemble", es_t, ep_t, (es.mean - ep.mean).cwiseAbs().maxCoeff());
    return 0;
}
