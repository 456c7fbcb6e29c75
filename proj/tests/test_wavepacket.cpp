#include <doctest.h>

#include <cmath>

#include "chainsim/transport.hpp"
#include "chainsim/wavepacket.hpp"

using namespace chainsim;

TEST_SUITE("wavepacket") {
    TEST_CASE("resonant drive writes the tilted Gaussian") {
        WavepacketSpec p{40.0, 4.0, 0.9, 5.0, 0.01};
        const int s = 80;
        const CVector beta = drive_initialize(p, {}, s, 1.0);
        const RVector f = gaussian_profile(p, s).f;
        for (int j = 1; j <= s; ++j) {
            const cplx expected = 2.0 * I * 5.0 * 0.01 * f(j - 1) * std::polar(1.0, -0.9 * j);
            CHECK(std::abs(beta(j - 1) - expected) < 1e-15);
        }
        CHECK(beta.squaredNorm() == doctest::Approx(p.initial_population()).epsilon(1e-10));
        CHECK(p.initial_population() == doctest::Approx(0.01));
    }

    TEST_CASE("profile is normalised and flags the edges") {
        WavepacketSpec p;
        p.center = 50.0;
        p.width = 5.0;
        const GaussianProfile g = gaussian_profile(p, 100);
        CHECK(g.f.squaredNorm() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK_FALSE(g.near_edge);
        p.center = 10.0;
        CHECK(gaussian_profile(p, 100).near_edge);
        p.width = 0.0;
        CHECK_THROWS_AS(gaussian_profile(p, 100), PhysicsError);
    }

    TEST_CASE("detuned sites are driven with a sinc weight") {
        WavepacketSpec p{5.0, 2.0, 0.0, 5.0, 0.01};
        std::vector<double> delta(10, 0.0);
        delta[4] = 200.0;
        const CVector beta = drive_initialize(p, delta, 10);
        const CVector resonant = drive_initialize(p, {}, 10);
        CHECK(std::abs(beta(4) / resonant(4) - std::sin(1.0) / 1.0) < 1e-14);
        CHECK(std::abs(beta(3) - resonant(3)) == 0.0);
    }

    TEST_CASE("drive preconditions") {
        WavepacketSpec p{5.0, 2.0, 0.0, 20.0, 0.01};
        CHECK_THROWS_AS(drive_initialize(p, {}, 10), PhysicsError);
        p.drive_amplitude = 5.0;
        CHECK_THROWS_AS(drive_initialize(p, {}, 10, 150.0), PhysicsError);
        const std::vector<double> short_list(3, 0.0);
        CHECK_THROWS_AS(drive_initialize(p, short_list, 10), PhysicsError);
    }

    TEST_CASE("closed-form evolution tracks the numerics") {
        ChainConfig c;
        c.geometry = {200, 0.08, pi / 2, Boundary::open};
        c.hopping = 1.0;
        c.decay_rate = 0.0;
        for (double q0 : {pi / 2, pi / 3}) {
            WavepacketSpec p{60.0, 6.0, q0, 5.0, 0.01};
            const auto times = uniform_times(10.0, 10);
            const TransportResult r = run_transport(c, p, times);
            for (size_t n = 0; n < times.size(); ++n) {
                const RVector pops = r.populations.row(static_cast<Eigen::Index>(n)).transpose();
                const PacketMoments m = centroid_and_width(pops);
                const double t = times[n];
                CHECK(m.centroid == doctest::Approx(analytic_center(60.0, 1.0, q0, t)).epsilon(2e-3));
                CHECK(m.width == doctest::Approx(analytic_width(6.0, 1.0, q0, t)).epsilon(2e-2));
                // run_transport normalises the launched packet to unit weight.
                const RVector model = analytic_evolution(p, 1.0, 0.0, t, 200) / p.initial_population();
                CHECK((model - pops).cwiseAbs().maxCoeff() < 0.05 * pops.maxCoeff());
            }
        }
    }

    TEST_CASE("analytic evolution decays and spreads") {
        WavepacketSpec p{50.0, 4.0, 0.0, 5.0, 0.01};
        const RVector a = analytic_evolution(p, 2.0, 1.0, 1.5, 100);
        CHECK(a.sum() == doctest::Approx(p.initial_population() * std::exp(-1.5)).epsilon(1e-6));
        CHECK(analytic_width(4.0, 2.0, 0.0, 1.5) == doctest::Approx(4.0 * std::sqrt(1.0 + 0.1875 * 0.1875)));
        CHECK(analytic_width(4.0, 2.0, pi / 2, 1.5) == doctest::Approx(4.0));
        CHECK(analytic_center(50.0, 2.0, pi / 2, 1.5) == doctest::Approx(56.0));
    }

    TEST_CASE("collective occupancy of a ring packet") {
        const ModeBasis basis = mode_basis(200, Boundary::periodic);
        WavepacketSpec p{100.0, 5.0, pi / 2, 5.0, 0.01};
        const CollectiveOccupancy occ = collective_occupancy(p, basis);
        CHECK(occ.valid);
        CHECK(occ.occupancy.sum() == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(occ.predicted_center == doctest::Approx(50.0));
        CHECK(occ.predicted_width == doctest::Approx(200.0 / (20.0 * pi)));
        CHECK(occ.center == doctest::Approx(occ.predicted_center).epsilon(1e-3));
        CHECK(occ.width == doctest::Approx(occ.predicted_width).epsilon(2e-2));
        CHECK(occ.fit_residual < 0.02);
    }

    TEST_CASE("collective occupancy of an open-chain packet") {
        const ModeBasis basis = mode_basis(200, Boundary::open);
        WavepacketSpec p{100.5, 5.0, pi / 2, 5.0, 0.01};
        const CollectiveOccupancy occ = collective_occupancy(p, basis);
        CHECK(occ.valid);
        CHECK(occ.predicted_center == doctest::Approx(0.5 * 201));
        CHECK(occ.center == doctest::Approx(occ.predicted_center).epsilon(1e-2));
        CHECK(occ.width == doctest::Approx(occ.predicted_width).epsilon(5e-2));

        p.width = 0.5;
        CHECK_FALSE(collective_occupancy(p, basis).valid);
    }

    TEST_CASE("moments of a population profile") {
        const std::vector<double> pops{0.0, 1.0, 2.0, 1.0, 0.0};
        const PacketMoments m = centroid_and_width(pops);
        CHECK(m.centroid == doctest::Approx(3.0));
        CHECK(m.width == doctest::Approx(std::sqrt(0.5)));
        CHECK_THROWS_AS(centroid_and_width(std::vector<double>{0.0, 0.0}), PhysicsError);
        CHECK_THROWS_AS(centroid_and_width(std::vector<double>{1.0, -0.1}), PhysicsError);
    }
}
