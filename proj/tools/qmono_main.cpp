// qmono_main.cpp
// Command-line front end: single-state analysis, the psi~(p, epsilon) sweep,
// and randomized verification campaigns.
//
// Exit codes: 0 success, 2 parse error, 3 invalid state, 4 I/O error,
// 5 acceptance-check failure in campaign mode.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qmono/campaigns.hpp"
#include "qmono/state_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitIo = 4;
constexpr int kExitCheckFailed = 5;

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        if (!std::cout) throw std::ios_base::failure("write to stdout failed");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open output file: " + path);
    out << text;
    out.flush();
    if (!out) throw std::ios_base::failure("write failed: " + path);
}

int run(const qmono::CampaignConfig& config) {
    using qmono::Command;
    if (config.command == Command::analyze) {
        if (config.state_path.empty()) {
            std::cerr << "qmono analyze: --state PATH is required\n";
            return kExitParse;
        }
        const qmono::StateVariant state = qmono::read_state_file(config.state_path);
        write_output(config.output_path,
                     qmono::analyze_state(state, config.state_path, config.format));
        return kExitOk;
    }

    const qmono::CampaignOutcome outcome = qmono::run_campaign(config);
    write_output(config.output_path, outcome.serialized);
    if (!outcome.warning.empty()) std::cerr << "warning: " << outcome.warning << '\n';
    return outcome.check_passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qmono: monogamy of quantum discord, classical correlations and entanglement "
                 "for few-qubit states"};
    app.require_subcommand(1);

    qmono::CampaignConfig config;
    std::string format = "";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--seed", config.seed, "Master seed (64-bit)");
        cmd->add_option("--samples", config.samples, "Sample count (0 = command default)");
        cmd->add_option("--grid", config.grid_points, "p-grid points incl. endpoints (fig1)");
        cmd->add_option("--epsilons", config.epsilons, "Comma-separated epsilon values (fig1)")
            ->delimiter(',');
        cmd->add_option("--tol", config.tolerance, "Check tolerance (0 = command default)");
        cmd->add_option("--out", config.output_path, "Output path (default: stdout)");
        cmd->add_option("--format", format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Report on a single state file");
    analyze->add_option("--state", config.state_path, "State JSON file")->required();
    add_common(analyze);

    CLI::App* fig1 = app.add_subcommand(
        "fig1", "Monogamy deficit of psi~(p, epsilon) over a p-grid (CSV by default)");
    add_common(fig1);

    CLI::App* w_c = app.add_subcommand("w-campaign", "W-class states are never monogamous");
    add_common(w_c);
    CLI::App* kw_c = app.add_subcommand(
        "kw-campaign", "Optimized discord vs the closed form on Haar 3-qubit states");
    add_common(kw_c);
    CLI::App* luo_c = app.add_subcommand(
        "luo-campaign", "Rank-2 upper bounds min(S_A,S_B) for discord and classical correlations");
    add_common(luo_c);
    CLI::App* ghz_c = app.add_subcommand(
        "ghz-fraction", "Observed non-monogamy fraction over random GHZ-class states");
    add_common(ghz_c);
    CLI::App* mix_c = app.add_subcommand(
        "mixed-ineq", "Distributed discord vs distributed EoF on mixed states");
    add_common(mix_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    if (analyze->parsed()) config.command = qmono::Command::analyze;
    else if (fig1->parsed()) config.command = qmono::Command::fig1;
    else if (w_c->parsed()) config.command = qmono::Command::w_campaign;
    else if (kw_c->parsed()) config.command = qmono::Command::kw_campaign;
    else if (luo_c->parsed()) config.command = qmono::Command::luo_campaign;
    else if (ghz_c->parsed()) config.command = qmono::Command::ghz_fraction;
    else if (mix_c->parsed()) config.command = qmono::Command::mixed_ineq;

    if (format.empty()) {
        config.format = (config.command == qmono::Command::fig1 ||
                         config.command == qmono::Command::analyze)
                            ? qmono::OutputFormat::csv
                            : qmono::OutputFormat::json;
        if (config.command == qmono::Command::analyze) config.format = qmono::OutputFormat::json;
    } else {
        config.format = format == "csv" ? qmono::OutputFormat::csv : qmono::OutputFormat::json;
    }

    try {
        return run(config);
    } catch (const qmono::StateParseError& e) {
        std::cerr << "qmono: " << e.what() << '\n';
        return kExitParse;
    } catch (const qmono::ConfigError& e) {
        std::cerr << "qmono: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "qmono: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "qmono: invalid state: " << e.what() << '\n';
        return kExitInvalidState;
    } catch (const std::domain_error& e) {
        std::cerr << "qmono: invalid state: " << e.what() << '\n';
        return kExitInvalidState;
    } catch (const std::exception& e) {
        std::cerr << "qmono: " << e.what() << '\n';
        return 1;
    }
}
