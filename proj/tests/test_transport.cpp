#include <doctest.h>

#include <omp.h>

#include "chainsim/transport.hpp"

using namespace chainsim;

namespace {

ChainConfig small_cavity_chain() {
    ChainConfig c;
    c.geometry = {40, 0.08, pi / 2, Boundary::open};
    c.hopping = 5.0;
    c.island_sites = 10;
    c.cavity_sites = 20;
    c.cavity = CavityMode{0.0, 1.0, std::vector<double>(20, 20.0)};
    return c;
}

WavepacketSpec small_packet() {
    WavepacketSpec p;
    p.center = 5.0;
    p.width = 1.5;
    return p;
}

// Restores the OpenMP thread count when a test changes it.
struct ThreadGuard {
    int saved = omp_get_max_threads();
    ~ThreadGuard() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_SUITE("transport") {
    TEST_CASE("time grids") {
        CHECK(uniform_times(1.0, 4) == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
        CHECK_THROWS_AS(uniform_times(-1.0, 4), PhysicsError);
        CHECK_THROWS_AS(uniform_times(1.0, 0), PhysicsError);
    }

    TEST_CASE("launch state is normalised and padded") {
        const ChainConfig c = small_cavity_chain();
        const CVector beta = launch_state(c, small_packet());
        CHECK(beta.size() == 41);
        CHECK(beta.norm() == doctest::Approx(1.0));
        CHECK(beta(40) == cplx(0.0, 0.0));
    }

    TEST_CASE("clean run reports transmission and norm") {
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(5.0, 50);
        const TransportResult r = run_transport(c, small_packet(), times);
        CHECK(r.transmission.size() == 51);
        CHECK(r.transmission(0) < 1e-12);
        CHECK(r.transmission.maxCoeff() > 1e-3);
        CHECK(r.norm(0) == doctest::Approx(1.0));
        CHECK((r.norm.array() <= 1.0 + 1e-12).all());
        const RVector rows = r.populations.rowwise().sum();
        CHECK((rows - r.norm).cwiseAbs().maxCoeff() < 1e-12);
    }

    TEST_CASE("zero-width disorder reproduces the clean run") {
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(5.0, 50);
        const TransportResult clean = run_transport(c, small_packet(), times);
        const DisorderSpec d{DisorderDistribution::uniform, 0.0, 3, 1};
        const EnsembleResult e = disorder_ensemble(c, small_packet(), d, times);
        for (int r = 0; r < 3; ++r) {
            CHECK((e.realizations.row(r).transpose() - clean.transmission).cwiseAbs().maxCoeff() == 0.0);
        }
        CHECK(e.standard_error.cwiseAbs().maxCoeff() < 1e-15);
    }

    TEST_CASE("serial and parallel ensembles are bit-identical") {
        ThreadGuard guard;
        omp_set_num_threads(4);
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(5.0, 25);
        const DisorderSpec d{DisorderDistribution::gaussian, 3.0, 9, 77};
        const EnsembleResult s = disorder_ensemble(c, small_packet(), d, times, Execution::serial);
        const EnsembleResult p = disorder_ensemble(c, small_packet(), d, times, Execution::parallel);
        CHECK(s.realizations == p.realizations);
        CHECK(s.mean == p.mean);
        CHECK(s.standard_error == p.standard_error);
    }

    TEST_CASE("realizations do not depend on the ensemble size") {
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(5.0, 25);
        DisorderSpec d{DisorderDistribution::uniform, 5.0, 3, 11};
        const EnsembleResult small = disorder_ensemble(c, small_packet(), d, times);
        d.realizations = 6;
        const EnsembleResult large = disorder_ensemble(c, small_packet(), d, times);
        CHECK(small.realizations == large.realizations.topRows(3));
        CHECK(realization_detunings(c, d, 4) == realization_detunings(c, d, 4));
        CHECK(realization_detunings(c, d, 4) != realization_detunings(c, d, 5));
    }

    TEST_CASE("ensemble statistics") {
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(5.0, 25);
        const DisorderSpec d{DisorderDistribution::uniform, 5.0, 5, 3};
        const EnsembleResult e = disorder_ensemble(c, small_packet(), d, times);
        const RVector mean = e.realizations.colwise().mean().transpose();
        CHECK((mean - e.mean).cwiseAbs().maxCoeff() < 1e-15);
        const Eigen::Index k = 20;
        const RVector col = e.realizations.col(k);
        const double var = (col.array() - col.mean()).square().sum() / 4.0;
        CHECK(e.standard_error(k) == doctest::Approx(std::sqrt(var / 5.0)));
    }

    TEST_CASE("weak disorder is a small perturbation") {
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(5.0, 25);
        const TransportResult clean = run_transport(c, small_packet(), times);
        const DisorderSpec d{DisorderDistribution::uniform, 5e-6, 4, 5};
        const EnsembleResult e = disorder_ensemble(c, small_packet(), d, times);
        CHECK((e.mean - clean.transmission).cwiseAbs().maxCoeff() < 1e-4);
        CHECK((e.mean - clean.transmission).cwiseAbs().maxCoeff() > 0.0);
    }

    TEST_CASE("config detunings are kept under disorder") {
        ChainConfig c = small_cavity_chain();
        c.detunings.assign(40, 0.0);
        c.detunings[3] = 7.0;
        const DisorderSpec d{DisorderDistribution::uniform, 0.0, 1, 0};
        CHECK(realization_detunings(c, d, 0)[3] == 7.0);
    }

    TEST_CASE("invalid ensembles are rejected") {
        const ChainConfig c = small_cavity_chain();
        const auto times = uniform_times(1.0, 2);
        CHECK_THROWS_AS(disorder_ensemble(c, small_packet(), {DisorderDistribution::uniform, -1.0, 2, 0}, times),
                        ConfigError);
        CHECK_THROWS_AS(disorder_ensemble(c, small_packet(), {DisorderDistribution::uniform, 1.0, 0, 0}, times),
                        ConfigError);
        ChainConfig free;
        free.geometry = {20, 0.08, pi / 2, Boundary::open};
        CHECK_THROWS_AS(disorder_ensemble(free, small_packet(), {DisorderDistribution::uniform, 1.0, 2, 0}, times),
                        PhysicsError);
    }
}
