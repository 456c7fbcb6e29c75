#include <doctest.h>

#include <cmath>

#include "chainsim/greens.hpp"
#include "chainsim/spectral.hpp"

using namespace chainsim;

TEST_SUITE("spectral") {
    TEST_CASE("mode bases are unitary") {
        for (Boundary b : {Boundary::open, Boundary::periodic}) {
            for (int s : {2, 7, 100}) {
                const ModeBasis basis = mode_basis(s, b);
                CHECK((basis.V.adjoint() * basis.V - CMatrix::Identity(s, s)).cwiseAbs().maxCoeff() < 1e-12);
            }
        }
    }

    TEST_CASE("open basis diagonalizes the uniform chain generator") {
        const int s = 100;
        const double hop = 0.07, gamma = 1.0;
        CMatrix m = CMatrix::Zero(s, s);
        for (int j = 0; j < s; ++j) {
            m(j, j) = 0.5 * gamma;
            if (j + 1 < s) m(j, j + 1) = m(j + 1, j) = I * hop;
        }
        const ModeBasis basis = mode_basis(s, Boundary::open);
        CMatrix d = basis.V.transpose() * m * basis.V;
        const RVector e = dispersion(basis, 0.0, hop);
        for (int k = 0; k < s; ++k) {
            CHECK(std::abs(d(k, k) - cplx(0.5 * gamma, e(k))) < 1e-12);
            d(k, k) = 0.0;
        }
        CHECK(d.cwiseAbs().maxCoeff() < 1e-10);
    }

    TEST_CASE("periodic basis diagonalizes the ring") {
        const int s = 16;
        RMatrix h = RMatrix::Zero(s, s);
        for (int j = 0; j < s; ++j) h(j, (j + 1) % s) = h((j + 1) % s, j) = 1.3;
        const ModeBasis basis = mode_basis(s, Boundary::periodic);
        CMatrix d = basis.V.adjoint() * h.cast<cplx>() * basis.V;
        const RVector e = dispersion(basis, 0.0, 1.3);
        for (int k = 0; k < s; ++k) {
            CHECK(std::abs(d(k, k) - e(k)) < 1e-12);
            d(k, k) = 0.0;
        }
        CHECK(d.cwiseAbs().maxCoeff() < 1e-12);
    }

    TEST_CASE("open band spans (-2 hopping, 2 hopping)") {
        const RVector e = dispersion(mode_basis(100, Boundary::open), 0.0, 0.07);
        CHECK(e.maxCoeff() < 0.14);
        CHECK(e.minCoeff() > -0.14);
        CHECK(e.maxCoeff() > 0.1399);
        CHECK(e(0) > e(99));
    }

    TEST_CASE("collective rates") {
        const int s = 110;
        const ModeBasis basis = mode_basis(s, Boundary::open);

        SUBCASE("independent decay gives gamma for every mode and no superradiance") {
            const RVector r = collective_rates(basis, RMatrix::Identity(s, s));
            CHECK((r.array() - 1.0).abs().maxCoeff() < 1e-12);
            CHECK(superradiant_fraction(r) == 0.0);
        }
        SUBCASE("rates sum to the trace of the decay matrix") {
            const EmitterGeometry g{s, 0.08, pi / 2, Boundary::open};
            const RMatrix gamma =
                build_coupling_matrices(g, Truncation::nearest_neighbor, DecayModel::collective).gamma;
            const RVector r = collective_rates(basis, gamma);
            CHECK(r.sum() == doctest::Approx(gamma.trace()).epsilon(1e-12));
            CHECK(r.minCoeff() > -1e-10);
        }
        SUBCASE("superradiant fraction grows with spacing") {
            double last = 0.0;
            for (double a : {0.05, 0.08, 0.15, 0.25}) {
                const EmitterGeometry g{s, a, pi / 2, Boundary::open};
                const RMatrix gamma =
                    build_coupling_matrices(g, Truncation::nearest_neighbor, DecayModel::collective).gamma;
                const double f = superradiant_fraction(collective_rates(basis, gamma));
                CHECK(f >= last);
                CHECK(f == doctest::Approx(2 * a).epsilon(0.25));
                last = f;
            }
        }
        SUBCASE("dimension mismatch is rejected") {
            CHECK_THROWS_AS(collective_rates(basis, RMatrix::Identity(3, 3)), PhysicsError);
        }
    }

    TEST_CASE("ring rates equal the lattice sum of the dissipative kernel") {
        const int s = 24;
        const EmitterGeometry g{s, 0.15, pi / 2, Boundary::periodic};
        const RMatrix gamma =
            build_coupling_matrices(g, Truncation::nearest_neighbor, DecayModel::collective).gamma;
        const ModeBasis basis = mode_basis(s, Boundary::periodic);
        const RVector r = collective_rates(basis, gamma);
        for (int c = 0; c < s; ++c) {
            double sum = 0.0;
            for (int j = 0; j < s; ++j) sum += gamma(0, j) * std::cos(basis.quasimomentum(c) * j);
            CHECK(r(c) == doctest::Approx(sum).epsilon(1e-12));
        }
    }

    TEST_CASE("collective transform round trip") {
        const ModeBasis basis = mode_basis(9, Boundary::periodic);
        CVector beta(9);
        for (int j = 0; j < 9; ++j) beta(j) = cplx(std::sin(j + 1.0), std::cos(2.0 * j));
        CHECK((from_collective(basis, to_collective(basis, beta)) - beta).norm() < 1e-13);
        CHECK(to_collective(basis, beta).norm() == doctest::Approx(beta.norm()));
        CHECK_THROWS_AS(to_collective(basis, CVector::Zero(4)), PhysicsError);
        CHECK_THROWS_AS(from_collective(basis, CVector::Zero(4)), PhysicsError);
        CHECK_THROWS_AS(mode_basis(1, Boundary::open), PhysicsError);
    }

    TEST_CASE("quasimomentum labels") {
        const ModeBasis open = mode_basis(10, Boundary::open);
        CHECK(open.mode(0) == 1);
        CHECK(open.quasimomentum(9) == doctest::Approx(10 * pi / 11));
        const ModeBasis ring = mode_basis(10, Boundary::periodic);
        CHECK(ring.mode(0) == 0);
        CHECK(ring.quasimomentum(5) == doctest::Approx(pi));
    }
}
