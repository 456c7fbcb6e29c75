#pragma once

// Data-parallel inner loops. Each kernel exists twice: an OpenMP version
// used by the library and a plain serial version kept as the reference the
// tests and the benchmark compare against.

#include "chainsim/types.hpp"

namespace chainsim::kernels {

namespace parallel {

/// out(i,j) = out(j,i) = pair(i,j) for i < j; diagonal set to `diag`.
template <typename PairFn>
void fill_symmetric(RMatrix& out, double diag, PairFn&& pair) {
    const Eigen::Index n = out.rows();
#pragma omp parallel for schedule(dynamic, 8)
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i, i) = diag;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = pair(static_cast<int>(i), static_cast<int>(j));
            out(i, j) = v;
            out(j, i) = v;
        }
    }
}

/// out = -i (Z rho - rho Z^dagger), the single-excitation block generator.
/// The generators built by the library are complex symmetric, so Z^dagger = conj(Z).
void density_rhs(const CMatrix& Z, const CMatrix& rho, CMatrix& out);

/// Diagonal of V^dagger gamma V.
RVector collective_rates(const CMatrix& V, const RMatrix& gamma);

}  // namespace parallel

namespace reference {

template <typename PairFn>
void fill_symmetric(RMatrix& out, double diag, PairFn&& pair) {
    const Eigen::Index n = out.rows();
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i, i) = diag;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = pair(static_cast<int>(i), static_cast<int>(j));
            out(i, j) = v;
            out(j, i) = v;
        }
    }
}

void density_rhs(const CMatrix& Z, const CMatrix& rho, CMatrix& out);

RVector collective_rates(const CMatrix& V, const RMatrix& gamma);

}  // namespace reference

}  // namespace chainsim::kernels
