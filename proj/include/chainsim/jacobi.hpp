#pragma once

#include "chainsim/types.hpp"

namespace chainsim {

struct SymmetricEigensystem {
    RVector values;   ///< ascending
    RMatrix vectors;  ///< column n pairs with values(n)
    int sweeps = 0;
};

/// Cyclic Jacobi rotations on a real symmetric matrix. Iterates until the
/// off-diagonal Frobenius norm drops below `tolerance` times the matrix norm.
/// Throws PhysicsError if the input is not square and symmetric.
SymmetricEigensystem jacobi_eigensystem(RMatrix a, double tolerance = 1e-12,
                                        int max_sweeps = 100);

}  // namespace chainsim
