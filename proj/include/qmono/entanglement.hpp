// entanglement.hpp
// Wootters concurrence, entanglement of formation and tangle quantities for
// two-qubit mixed states and three-qubit pure states.

#pragma once

#include "qmono/density_matrix.hpp"
#include "qmono/pure_state.hpp"

namespace qmono {

// -x log2 x - (1-x) log2 (1-x); endpoints map to 0.
double binary_entropy(double x);

// (sigma_y (x) sigma_y) rho* (sigma_y (x) sigma_y), conjugation in the
// computational basis.
ComplexMatrix spin_flip(const DensityMatrix& rho_2q);

// max(0, sqrt(mu1) - sqrt(mu2) - sqrt(mu3) - sqrt(mu4)) with mu_i the
// descending eigenvalues of sqrt(rho) rho~ sqrt(rho).
double concurrence(const DensityMatrix& rho_2q);

// h((1 + sqrt(1 - C^2)) / 2)
double eof(const DensityMatrix& rho_2q);

struct EntanglementValues {
    double concurrence = 0.0;
    double concurrence_sq = 0.0;
    double eof = 0.0;  // bits
};

EntanglementValues entanglement_values(const DensityMatrix& rho_2q);

// C^2 of the (focus | rest) bipartition of a pure 3-qubit state: 4 det(rho_focus).
double concurrence_sq_pure_bipartition(const PureState& psi_3q, int focus);

// C^2_{focus,rest} - C^2_{focus,j} - C^2_{focus,k}; values within 1e-9 below
// zero are clamped to 0 (the W class sits exactly on the zero manifold).
double three_tangle(const PureState& psi_3q, int focus);

}  // namespace qmono
