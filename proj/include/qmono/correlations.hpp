// correlations.hpp
// Von Neumann entropy, mutual information, and the measurement-optimized
// classical correlations / quantum discord of a two-qubit state.
//
// Measurements are rank-1 projective on a single qubit, parametrized by
// Bloch angles. The subscript convention follows the literature: D_{A,B}
// and J_{A,B} measure qubit B.

#pragma once

#include <vector>

#include "qmono/density_matrix.hpp"

namespace qmono {

struct MeasurementAngles {
    double theta = 0.0;  // [0, pi]
    double phi = 0.0;    // [0, 2*pi)
};

// Which qubit the measurement acts on.
enum class MeasuredSide { A, B };

struct DiscordResult {
    double discord = 0.0;      // bits
    double classical = 0.0;    // bits
    double mutual_info = 0.0;  // bits
    MeasurementAngles optimal_angles;
};

struct ClassicalCorrelations {
    double value = 0.0;  // bits
    MeasurementAngles angles;
};

// All logarithms are base 2; quantities are in bits.
double von_neumann_entropy(const DensityMatrix& rho);

// S(rho_A) + S(rho_B) - S(rho_AB) for the bipartition (part_a | part_b).
double mutual_information(const DensityMatrix& rho, const std::vector<int>& part_a,
                          const std::vector<int>& part_b);
// Two-qubit shorthand for the ({0} | {1}) split.
double mutual_information(const DensityMatrix& rho_ab);

// sum_j p_j S(rho_{unmeasured | j}) for the projective basis V(theta, phi);
// outcomes with p_j < 1e-12 contribute exactly 0.
double measured_conditional_entropy(const DensityMatrix& rho_ab, const MeasurementAngles& angles,
                                    MeasuredSide measured = MeasuredSide::B);

// max over projective angles of S(rho_unmeasured) - S(.|{E_j}), with the
// maximizing angles. Exhaustive 64x64 grid then Nelder-Mead refinement.
ClassicalCorrelations classical_correlations(const DensityMatrix& rho_ab, MeasuredSide measured);

DiscordResult quantum_discord(const DensityMatrix& rho_ab, MeasuredSide measured);

}  // namespace qmono
