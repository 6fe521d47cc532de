#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qmono/campaigns.hpp"
#include "qmono/states.hpp"
#include "test_helpers.hpp"

using namespace qmono;
using namespace qmono::testing;

namespace {

CampaignConfig make_config(Command cmd, int samples, std::uint64_t seed) {
    CampaignConfig c;
    c.command = cmd;
    c.samples = samples;
    c.seed = seed;
    return c;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char ch : text)
        if (ch == '\n') ++n;
    return n;
}

}  // namespace

TEST_SUITE("campaigns") {

TEST_CASE("fig1 rows cover the grid and flag the degenerate endpoints") {
    const auto rows = fig1_rows(11, {1.0, 0.5}, 1e-9);
    REQUIRE(rows.size() == 22);
    CHECK(rows.front().p == 0.0);
    CHECK(rows[10].p == 1.0);
    CHECK(rows.front().monogamous_flag == "degenerate");  // qubit A factorized at p = 0
    CHECK(rows[10].monogamous_flag == "degenerate");      // psi~(1,1) = |000>
    // interior W-curve rows are all violating
    for (size_t i = 1; i < 10; ++i) CHECK(rows[i].monogamous_flag == "0");
    // the GHZ point p = 1, eps = 0.5 is monogamous with deficit 1
    CHECK(rows.back().monogamous_flag == "1");
    CHECK(rows.back().eof_deficit == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fig1 row values match the direct closed-form chain") {
    // grid of 4 points puts p = 1/3 on the grid exactly
    const auto rows = fig1_rows(4, {1.0}, 1e-9);
    const Fig1Row& w_row = rows[1];
    CHECK(w_row.p == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(w_row.violation == doctest::Approx(0.18179968511102537).epsilon(1e-9));
    CHECK(w_row.D_AB == doctest::Approx(w_row.E_AC).epsilon(1e-9));  // S_B = S_C here
}

TEST_CASE("fig1 CSV has the fixed column order and 9-significant-digit floats") {
    CampaignConfig config = make_config(Command::fig1, 0, 1);
    config.grid_points = 5;
    config.epsilons = {1.0};
    config.format = OutputFormat::csv;
    const CampaignOutcome out = run_campaign(config);
    std::istringstream lines(out.serialized);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p,epsilon,S_A,E_AB,E_AC,D_AB,D_AC,eof_deficit,violation,monogamous_flag");
    CHECK(count_lines(out.serialized) == 6);
    std::string row;
    std::getline(lines, row);  // p = 0 row: violation must print as plain 0
    CHECK(row == "0,1,0,0,0,0,0,0,0,degenerate");
}

TEST_CASE("format_sig9 rounds to nine significant digits") {
    CHECK(format_sig9(0.18179968511102537) == "0.181799685");
    CHECK(format_sig9(-0.0) == "0");
    CHECK(format_sig9(1.0) == "1");
}

TEST_CASE("campaigns are deterministic for a fixed seed") {
    for (Command cmd : {Command::w_campaign, Command::kw_campaign, Command::luo_campaign,
                        Command::ghz_fraction, Command::mixed_ineq}) {
        const CampaignConfig config = make_config(cmd, 8, 321);
        const CampaignOutcome a = run_campaign(config);
        const CampaignOutcome b = run_campaign(config);
        CHECK(a.serialized == b.serialized);
        CHECK(!a.serialized.empty());
    }
}

TEST_CASE("campaign summaries echo the full config") {
    const CampaignOutcome out = run_campaign(make_config(Command::w_campaign, 5, 77));
    CHECK(out.serialized.find("\"seed\": 77") != std::string::npos);
    CHECK(out.serialized.find("\"samples\": 5") != std::string::npos);
    CHECK(out.serialized.find("\"command\": \"w-campaign\"") != std::string::npos);
    CHECK(out.serialized.find("\"config\"") != std::string::npos);
}

TEST_CASE("w-campaign passes on W-class samples") {
    const CampaignOutcome out = run_campaign(make_config(Command::w_campaign, 50, 99));
    CHECK(out.check_passed);
    CHECK(out.serialized.find("\"pass_count\": 50") != std::string::npos);
}

TEST_CASE("kw-campaign residuals stay within tolerance") {
    const CampaignOutcome out = run_campaign(make_config(Command::kw_campaign, 10, 5));
    CHECK(out.check_passed);
}

TEST_CASE("luo-campaign margins stay within tolerance") {
    const CampaignOutcome out = run_campaign(make_config(Command::luo_campaign, 15, 6));
    CHECK(out.check_passed);
}

TEST_CASE("mixed-ineq campaign reports violating samples faithfully") {
    // seed 7 places a genuine counterexample (slack = -0.0281) at index 0
    const CampaignOutcome out = run_campaign(make_config(Command::mixed_ineq, 10, 7));
    CHECK_FALSE(out.check_passed);
    CHECK(out.serialized.find("\"pure_equality\"") != std::string::npos);
    CHECK(out.serialized.find("\"pass_count\": 9") != std::string::npos);
    CHECK(out.serialized.find("\"min_slack\": -0.028100234") != std::string::npos);
}

TEST_CASE("ghz-fraction reports a fraction and never fails the run") {
    const CampaignOutcome out = run_campaign(make_config(Command::ghz_fraction, 200, 11));
    CHECK(out.check_passed);  // out-of-band is a warning, not a failure
    CHECK(out.serialized.find("violation_fraction") != std::string::npos);
}

TEST_CASE("config validation") {
    CampaignConfig bad = make_config(Command::w_campaign, -3, 1);
    CHECK_THROWS_AS(run_campaign(bad), ConfigError);

    CampaignConfig bad_eps = make_config(Command::fig1, 0, 1);
    bad_eps.epsilons = {1.5};
    CHECK_THROWS_AS(run_campaign(bad_eps), ConfigError);

    CampaignConfig bad_grid = make_config(Command::fig1, 0, 1);
    bad_grid.grid_points = 1;
    CHECK_THROWS_AS(run_campaign(bad_grid), ConfigError);
}

TEST_CASE("sample_mixed_three_qubit builds valid reproducible mixtures") {
    const DensityMatrix a = sample_mixed_three_qubit(13);
    const DensityMatrix b = sample_mixed_three_qubit(13);
    CHECK(a.matrix().max_abs_diff(b.matrix()) == 0.0);
    CHECK(a.eigenvalues()[0] < 1.0 - 1e-6);  // genuinely mixed
}

TEST_CASE("analyze renders the monogamy report for a pure 3-qubit state") {
    const std::string json = analyze_state(max_w(), "w", OutputFormat::json);
    CHECK(json.find("\"violation\": 0.1817996851") != std::string::npos);
    CHECK(json.find("\"measurement_class\"") != std::string::npos);

    const std::string csv = analyze_state(max_w(), "w", OutputFormat::csv);
    CHECK(csv.find("state_id,S_A,S_B,S_C,") == 0);
    CHECK(csv.find("0.181799685") != std::string::npos);
}

TEST_CASE("analyze renders the bound report for a two-qubit density matrix") {
    const std::string json =
        analyze_state(random_rank2_two_qubit(3), "rank2", OutputFormat::json);
    CHECK(json.find("\"type\": \"two-qubit-density\"") != std::string::npos);
    CHECK(json.find("\"margins\"") != std::string::npos);
    CHECK(json.find("\"rank2\": true") != std::string::npos);
}

TEST_CASE("analyze rejects inputs outside the two supported shapes") {
    CHECK_THROWS_AS(analyze_state(haar_random_pure(2, 1), "x", OutputFormat::json),
                    std::invalid_argument);
    CHECK_THROWS_AS(analyze_state(random_density(3, 1), "x", OutputFormat::json),
                    std::invalid_argument);
}

}  // TEST_SUITE
