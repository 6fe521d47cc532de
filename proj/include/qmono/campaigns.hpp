// campaigns.hpp
// Parameter sweeps and randomized verification campaigns behind the CLI.
// Everything here is deterministic for a fixed config: per-sample seeds are
// derived from the master seed, and serialization is byte-stable.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmono/density_matrix.hpp"
#include "qmono/pure_state.hpp"
#include "qmono/state_io.hpp"

namespace qmono {

enum class Command { analyze, fig1, w_campaign, kw_campaign, luo_campaign, ghz_fraction, mixed_ineq };
enum class OutputFormat { csv, json };

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CampaignConfig {
    Command command = Command::analyze;
    int samples = 0;        // 0 -> per-command default
    std::uint64_t seed = 1;
    int grid_points = 101;  // p-axis resolution, endpoints included
    std::vector<double> epsilons = {1.0, 0.75, 0.5, 0.01};
    double tolerance = 0.0;  // 0 -> per-command default
    std::string output_path;  // empty -> stdout
    OutputFormat format = OutputFormat::json;
    std::string state_path;
};

const char* command_name(Command c);

// Fills per-command defaults (samples, tolerance) and validates invariants;
// throws ConfigError on violations.
CampaignConfig resolve_config(CampaignConfig config);

struct Fig1Row {
    double p = 0.0;
    double epsilon = 0.0;
    double S_A = 0.0;
    double E_AB = 0.0, E_AC = 0.0;
    double D_AB = 0.0, D_AC = 0.0;
    double eof_deficit = 0.0;
    double violation = 0.0;
    // "1" monogamous, "0" violating, "degenerate" when |deficit| <= tolerance
    std::string monogamous_flag;
};

std::vector<Fig1Row> fig1_rows(int grid_points, const std::vector<double>& epsilons,
                               double tolerance);

struct CampaignOutcome {
    std::string serialized;   // CSV or JSON, exactly what gets written
    bool check_passed = true;
    std::string warning;      // nonempty for soft-check misses
};

CampaignOutcome run_campaign(const CampaignConfig& config);

// Single-state analysis: pure 3-qubit states get the full monogamy report,
// two-qubit density matrices the upper-bound report.
std::string analyze_state(const StateVariant& state, const std::string& state_id,
                          OutputFormat format);

// Random mixture of two Haar pure states, weight uniform on [0, 1].
DensityMatrix sample_mixed_three_qubit(std::uint64_t seed);

// %.9g with negative zero canonicalized; the CSV float format.
std::string format_sig9(double x);

}  // namespace qmono
