#include "chainsim/kernels.hpp"

namespace chainsim::kernels {

namespace parallel {

void density_rhs(const CMatrix& Z, const CMatrix& rho, CMatrix& out) {
    const Eigen::Index n = Z.rows();
    out.resize(n, n);
    const CMatrix Zd = Z.adjoint();
    // Column j of (Z rho - rho Z^dagger) only needs column j of rho and of Z^dagger.
#pragma omp parallel for schedule(static)
    for (Eigen::Index j = 0; j < n; ++j) {
        out.col(j).noalias() = Z * rho.col(j);
        out.col(j).noalias() -= rho * Zd.col(j);
        out.col(j) *= -I;
    }
}

RVector collective_rates(const CMatrix& V, const RMatrix& gamma) {
    const Eigen::Index n = V.cols();
    RVector rates(n);
#pragma omp parallel for schedule(static)
    for (Eigen::Index k = 0; k < n; ++k) {
        const CVector gv = gamma * V.col(k);
        rates(k) = V.col(k).dot(gv).real();  // dot conjugates the left operand
    }
    return rates;
}

}  // namespace parallel

namespace reference {

void density_rhs(const CMatrix& Z, const CMatrix& rho, CMatrix& out) {
    out = -I * (Z * rho - rho * Z.adjoint());
}

RVector collective_rates(const CMatrix& V, const RMatrix& gamma) {
    const CMatrix transformed = V.adjoint() * gamma.cast<cplx>() * V;
    return transformed.diagonal().real();
}

}  // namespace reference

}  // namespace chainsim::kernels
