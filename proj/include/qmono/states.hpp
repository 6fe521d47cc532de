// states.hpp
// Three-qubit state families, seeded random states, and rank-2 purification.

#pragma once

#include <cstdint>

#include "qmono/density_matrix.hpp"
#include "qmono/pure_state.hpp"

namespace qmono {

// Canonical five-parameter form of a GHZ-class three-qubit pure state:
// l0|000> + l1 e^{i theta}|100> + l2|101> + l3|110> + l4|111>.
struct GhzClassParams {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double theta = 0.0;  // [0, pi]
};

struct PsiTildeParams {
    double p = 0.0;        // [0, 1]
    double epsilon = 0.0;  // [0, 1]
};

PureState ghz_class_state(const GhzClassParams& params);
PureState w_class_state(double lambda0, double lambda1, double lambda2, double lambda3,
                        double theta);

// sqrt(p*eps)|000> + sqrt(p*(1-eps))|111> + sqrt((1-p)/2)(|101> + |110>)
PureState psi_tilde(const PsiTildeParams& params);

PureState haar_random_pure(int num_qubits, std::uint64_t seed);

// Reduction of a Haar-random 3-qubit pure state; rank <= 2 by construction.
DensityMatrix random_rank2_two_qubit(std::uint64_t seed);

// Campaign sampling: lambdas uniform on the positive orthant of the unit
// sphere, theta uniform on [0, pi].
GhzClassParams random_ghz_class(std::uint64_t seed);
GhzClassParams random_w_class(std::uint64_t seed);

// |phi> = sqrt(p1)|u1>|0>_C + sqrt(p2)|u2>|1>_C with the ancilla appended as
// the least significant qubit. Eigenvectors are phase-fixed so the first
// nonzero component is real positive. Throws std::domain_error above rank 2.
PureState purify_rank2(const DensityMatrix& rho);

DensityMatrix projector(const PureState& psi);
DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep);

}  // namespace qmono
