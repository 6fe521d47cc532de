// monogamy.hpp
// Monogamy deficits, the Koashi-Winter closed form for discord, interaction
// information, the entropy chain rule, and rank-2 upper-bound reports.
//
// Sign convention: deficit = Q_{A,BC} - Q_{A,B} - Q_{A,C}; positive means
// monogamous. Reports also carry violation = -deficit, the quantity whose
// positivity marks non-monogamous states.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "qmono/density_matrix.hpp"
#include "qmono/pure_state.hpp"

namespace qmono {

// D_{i,k} = S(rho_k) - S(rho_l) + E(rho_{i,l}) for a pure 3-qubit state;
// no measurement optimization involved.
double discord_via_kw(const PureState& psi_3q, int i, int k, int l);

struct KwResidual {
    // |optimized S(i|{E_j^k}) - E(rho_{i,l})|
    double cond_entropy_vs_eof = 0.0;
    // |optimized discord D_{i,k} - closed-form discord|
    double discord_vs_closed_form = 0.0;
};

KwResidual kw_residual(const PureState& psi_3q, int i, int k, int l);

// S(rho_focus) - D_{focus,j} - D_{focus,k}, discords via the closed form.
double discord_monogamy_deficit(const PureState& psi_3q, int focus);

// S(rho_focus) - E_{focus,j} - E_{focus,k}. Equals the discord deficit
// identically on pure states.
double eof_monogamy_deficit(const PureState& psi_3q, int focus);

// Inclusion-exclusion over all nonempty subsets of the partition groups,
// sign (-1)^(r+n+1) for a subset of r groups out of n. Reduces to mutual
// information for n = 2; can be negative.
double interaction_information(const DensityMatrix& rho,
                               const std::vector<std::vector<int>>& partition);

// |I_{A,BC} - I_{A,B} - I_{A,C} - I_{ABC}|; an arithmetic identity in the
// seven subsystem entropies, so it must vanish to rounding.
double mutual_info_decomposition_residual(const DensityMatrix& rho_3q);

struct MixedDiscordVsEof {
    double lhs = 0.0;    // D_{A,B} + D_{A,C}, optimized on the reductions
    double rhs = 0.0;    // E_{A,B} + E_{A,C}
    double slack = 0.0;  // lhs - rhs
};

MixedDiscordVsEof mixed_discord_vs_eof(const DensityMatrix& rho_3q);

struct ChainRuleResult {
    bool applicable = false;  // false when |S_A - S_B| <= 1e-6
    bool holds = false;
    double margin = 0.0;  // S_lo + E_{hi,C} - S_hi - E_{lo,C}
};

// If S(rho_A) > S(rho_B) then S(rho_A) + E_{B,C} < S(rho_B) + E_{A,C}.
ChainRuleResult chain_rule_check(const PureState& psi_3q);

struct LuoReport {
    double D_AB = 0.0, D_BA = 0.0, J_AB = 0.0, J_BA = 0.0;
    double S_A = 0.0, S_B = 0.0;
    // min(S_A, S_B) minus D_AB, D_BA, J_AB, J_BA in that order
    std::array<double, 4> margins = {0, 0, 0, 0};
};

LuoReport luo_bound_report(const DensityMatrix& rho_2q, bool require_rank2);

struct MonogamyReport {
    std::string state_id;
    double S_A = 0.0, S_B = 0.0, S_C = 0.0;
    double D_AB = 0.0, D_AC = 0.0;
    double E_AB = 0.0, E_AC = 0.0;
    double discord_deficit = 0.0;
    double eof_deficit = 0.0;
    double violation = 0.0;
    double kw_residual_max = 0.0;
    double interaction_info = 0.0;
};

// Full per-state record for a pure 3-qubit state, focus qubit A.
// kw_residual_max runs the measurement optimizer for both pairs.
MonogamyReport monogamy_report(const std::string& state_id, const PureState& psi_3q);

}  // namespace qmono
