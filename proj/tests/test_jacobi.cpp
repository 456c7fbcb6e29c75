#include <doctest.h>

#include "chainsim/jacobi.hpp"
#include "chainsim/rng.hpp"

using namespace chainsim;

namespace {

RMatrix random_symmetric(int n, std::uint64_t seed) {
    CounterRng rng(seed, 0);
    RMatrix a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = rng.normal();
    }
    return a;
}

}  // namespace

TEST_SUITE("jacobi") {
    TEST_CASE("agrees with a library eigensolver") {
        for (int n : {1, 2, 5, 40}) {
            const RMatrix a = random_symmetric(n, 11 + n);
            const SymmetricEigensystem es = jacobi_eigensystem(a);
            Eigen::SelfAdjointEigenSolver<RMatrix> ref(a);
            CHECK((es.values - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10 * std::max(1.0, a.norm()));
        }
    }

    TEST_CASE("eigenpairs reconstruct the matrix and are orthonormal") {
        const RMatrix a = random_symmetric(30, 3);
        const SymmetricEigensystem es = jacobi_eigensystem(a);
        const RMatrix& v = es.vectors;
        CHECK((v.transpose() * v - RMatrix::Identity(30, 30)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((v * es.values.asDiagonal() * v.transpose() - a).cwiseAbs().maxCoeff() < 1e-10);
        for (int i = 1; i < 30; ++i) CHECK(es.values(i - 1) <= es.values(i));
    }

    TEST_CASE("diagonal input needs no rotation") {
        RMatrix d = RMatrix::Zero(3, 3);
        d.diagonal() << 3.0, -1.0, 2.0;
        const SymmetricEigensystem es = jacobi_eigensystem(d);
        CHECK(es.values(0) == -1.0);
        CHECK(es.values(2) == 3.0);
        CHECK(es.sweeps == 0);
    }

    TEST_CASE("rejects non-square and non-symmetric input") {
        CHECK_THROWS_AS(jacobi_eigensystem(RMatrix::Zero(2, 3)), PhysicsError);
        RMatrix a = RMatrix::Identity(3, 3);
        a(0, 1) = 1.0;
        CHECK_THROWS_AS(jacobi_eigensystem(a), PhysicsError);
    }
}
