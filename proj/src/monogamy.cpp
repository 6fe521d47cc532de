#include "qmono/monogamy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmono/correlations.hpp"
#include "qmono/entanglement.hpp"
#include "qmono/states.hpp"
#include "qmono/tensor.hpp"

namespace qmono {

namespace {

void require_distinct_triple(const PureState& psi, int i, int k, int l, const char* who) {
    if (psi.num_qubits() != 3) {
        throw std::invalid_argument(std::string(who) + ": expected a three-qubit pure state");
    }
    if (i < 0 || i > 2 || k < 0 || k > 2 || l < 0 || l > 2 || i == k || i == l || k == l) {
        throw std::invalid_argument(std::string(who) + ": qubit indices must be distinct and in range");
    }
}

double single_qubit_entropy(const PureState& psi, int q) {
    return von_neumann_entropy(reduced_density(psi, {q}));
}

}  // namespace

double discord_via_kw(const PureState& psi_3q, int i, int k, int l) {
    require_distinct_triple(psi_3q, i, k, l, "discord_via_kw");
    const double s_k = single_qubit_entropy(psi_3q, k);
    const double s_l = single_qubit_entropy(psi_3q, l);
    return s_k - s_l + eof(reduced_density(psi_3q, {i, l}));
}

KwResidual kw_residual(const PureState& psi_3q, int i, int k, int l) {
    require_distinct_triple(psi_3q, i, k, l, "kw_residual");
    const DensityMatrix rho_ik = reduced_density(psi_3q, {i, k});
    const double e_il = eof(reduced_density(psi_3q, {i, l}));

    const DiscordResult opt = quantum_discord(rho_ik, MeasuredSide::B);
    const double s_i = single_qubit_entropy(psi_3q, i);
    const double optimized_cond = s_i - opt.classical;

    KwResidual out;
    out.cond_entropy_vs_eof = std::abs(optimized_cond - e_il);
    out.discord_vs_closed_form = std::abs(opt.discord - discord_via_kw(psi_3q, i, k, l));
    return out;
}

double discord_monogamy_deficit(const PureState& psi_3q, int focus) {
    if (focus < 0 || focus > 2) {
        throw std::invalid_argument("discord_monogamy_deficit: focus out of range");
    }
    const int j = focus == 0 ? 1 : 0;
    const int k = focus == 2 ? 1 : 2;
    return single_qubit_entropy(psi_3q, focus) - discord_via_kw(psi_3q, focus, j, k) -
           discord_via_kw(psi_3q, focus, k, j);
}

double eof_monogamy_deficit(const PureState& psi_3q, int focus) {
    if (focus < 0 || focus > 2) {
        throw std::invalid_argument("eof_monogamy_deficit: focus out of range");
    }
    const int j = focus == 0 ? 1 : 0;
    const int k = focus == 2 ? 1 : 2;
    return single_qubit_entropy(psi_3q, focus) - eof(reduced_density(psi_3q, {focus, j})) -
           eof(reduced_density(psi_3q, {focus, k}));
}

double interaction_information(const DensityMatrix& rho,
                               const std::vector<std::vector<int>>& partition) {
    const int n = static_cast<int>(partition.size());
    if (n < 2) throw std::invalid_argument("interaction_information: need at least two groups");
    const int nq = rho.num_qubits();
    std::vector<bool> seen(nq, false);
    for (const auto& group : partition) {
        if (group.empty()) throw std::invalid_argument("interaction_information: empty group");
        for (int q : group) {
            if (q < 0 || q >= nq) {
                throw std::invalid_argument("interaction_information: qubit index out of range");
            }
            if (seen[q]) throw std::invalid_argument("interaction_information: overlapping groups");
            seen[q] = true;
        }
    }
    for (bool s : seen)
        if (!s) throw std::invalid_argument("interaction_information: partition must cover all qubits");

    double total = 0.0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        std::vector<int> keep;
        for (int g = 0; g < n; ++g)
            if (mask & (1 << g)) keep.insert(keep.end(), partition[g].begin(), partition[g].end());
        std::sort(keep.begin(), keep.end());
        const double entropy = von_neumann_entropy(partial_trace(rho, keep));
        const int r = __builtin_popcount(static_cast<unsigned>(mask));
        total += ((r + n + 1) % 2 == 0) ? entropy : -entropy;
    }
    return total;
}

double mutual_info_decomposition_residual(const DensityMatrix& rho_3q) {
    if (rho_3q.num_qubits() != 3) {
        throw std::invalid_argument("mutual_info_decomposition_residual: expected three qubits");
    }
    const double s_a = von_neumann_entropy(partial_trace(rho_3q, {0}));
    const double s_b = von_neumann_entropy(partial_trace(rho_3q, {1}));
    const double s_c = von_neumann_entropy(partial_trace(rho_3q, {2}));
    const double s_ab = von_neumann_entropy(partial_trace(rho_3q, {0, 1}));
    const double s_ac = von_neumann_entropy(partial_trace(rho_3q, {0, 2}));
    const double s_bc = von_neumann_entropy(partial_trace(rho_3q, {1, 2}));
    const double s_abc = von_neumann_entropy(rho_3q);

    const double i_a_bc = s_a + s_bc - s_abc;
    const double i_ab = s_a + s_b - s_ab;
    const double i_ac = s_a + s_c - s_ac;
    const double i_abc = -s_a - s_b - s_c + s_ab + s_ac + s_bc - s_abc;
    return std::abs(i_a_bc - i_ab - i_ac - i_abc);
}

MixedDiscordVsEof mixed_discord_vs_eof(const DensityMatrix& rho_3q) {
    if (rho_3q.num_qubits() != 3) {
        throw std::invalid_argument("mixed_discord_vs_eof: expected three qubits");
    }
    const DensityMatrix rho_ab = partial_trace(rho_3q, {0, 1});
    const DensityMatrix rho_ac = partial_trace(rho_3q, {0, 2});
    MixedDiscordVsEof out;
    out.lhs = quantum_discord(rho_ab, MeasuredSide::B).discord +
              quantum_discord(rho_ac, MeasuredSide::B).discord;
    out.rhs = eof(rho_ab) + eof(rho_ac);
    out.slack = out.lhs - out.rhs;
    return out;
}

ChainRuleResult chain_rule_check(const PureState& psi_3q) {
    if (psi_3q.num_qubits() != 3) {
        throw std::invalid_argument("chain_rule_check: expected a three-qubit pure state");
    }
    const double s_a = single_qubit_entropy(psi_3q, 0);
    const double s_b = single_qubit_entropy(psi_3q, 1);
    ChainRuleResult out;
    if (std::abs(s_a - s_b) <= 1e-6) return out;  // near-degenerate: skipped
    out.applicable = true;

    const int hi = s_a > s_b ? 0 : 1;
    const int lo = 1 - hi;
    const double s_hi = std::max(s_a, s_b);
    const double s_lo = std::min(s_a, s_b);
    const double e_hi_c = eof(reduced_density(psi_3q, {hi, 2}));
    const double e_lo_c = eof(reduced_density(psi_3q, {lo, 2}));
    out.margin = (s_lo + e_hi_c) - (s_hi + e_lo_c);
    out.holds = out.margin > -1e-8;
    return out;
}

LuoReport luo_bound_report(const DensityMatrix& rho_2q, bool require_rank2) {
    if (rho_2q.num_qubits() != 2) {
        throw std::invalid_argument("luo_bound_report: expected a two-qubit state");
    }
    if (require_rank2 && rho_2q.eigenvalues()[2] > kEigenClampFloor) {
        throw std::domain_error("luo_bound_report: state has rank greater than 2");
    }

    LuoReport report;
    report.S_A = von_neumann_entropy(partial_trace(rho_2q, {0}));
    report.S_B = von_neumann_entropy(partial_trace(rho_2q, {1}));
    const DiscordResult measured_b = quantum_discord(rho_2q, MeasuredSide::B);
    const DiscordResult measured_a = quantum_discord(rho_2q, MeasuredSide::A);
    report.D_AB = measured_b.discord;
    report.J_AB = measured_b.classical;
    report.D_BA = measured_a.discord;
    report.J_BA = measured_a.classical;

    const double bound = std::min(report.S_A, report.S_B);
    report.margins = {bound - report.D_AB, bound - report.D_BA, bound - report.J_AB,
                      bound - report.J_BA};
    return report;
}

MonogamyReport monogamy_report(const std::string& state_id, const PureState& psi_3q) {
    if (psi_3q.num_qubits() != 3) {
        throw std::invalid_argument("monogamy_report: expected a three-qubit pure state");
    }
    MonogamyReport r;
    r.state_id = state_id;
    r.S_A = single_qubit_entropy(psi_3q, 0);
    r.S_B = single_qubit_entropy(psi_3q, 1);
    r.S_C = single_qubit_entropy(psi_3q, 2);
    r.D_AB = discord_via_kw(psi_3q, 0, 1, 2);
    r.D_AC = discord_via_kw(psi_3q, 0, 2, 1);
    r.E_AB = eof(reduced_density(psi_3q, {0, 1}));
    r.E_AC = eof(reduced_density(psi_3q, {0, 2}));
    r.discord_deficit = r.S_A - r.D_AB - r.D_AC;
    r.eof_deficit = r.S_A - r.E_AB - r.E_AC;
    r.violation = -r.eof_deficit;

    const KwResidual res_ab = kw_residual(psi_3q, 0, 1, 2);
    const KwResidual res_ac = kw_residual(psi_3q, 0, 2, 1);
    r.kw_residual_max = std::max({res_ab.cond_entropy_vs_eof, res_ab.discord_vs_closed_form,
                                  res_ac.cond_entropy_vs_eof, res_ac.discord_vs_closed_form});
    r.interaction_info = interaction_information(projector(psi_3q), {{0}, {1}, {2}});
    return r;
}

}  // namespace qmono
