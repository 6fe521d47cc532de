#include <doctest.h>

#include <cmath>

#include "qmono/campaigns.hpp"
#include "qmono/correlations.hpp"
#include "qmono/entanglement.hpp"
#include "qmono/monogamy.hpp"
#include "qmono/states.hpp"
#include "qmono/tensor.hpp"
#include "test_helpers.hpp"

using namespace qmono;
using namespace qmono::testing;

namespace {

// Frozen reference values, computed independently at high precision:
//   S(rho_A) of the maximally entangled W state  = h(1/3)
//   EoF of its pairwise reduction (C = 2/3)      = h((1 + sqrt(5)/3)/2)
constexpr double kWEntropyA = 0.9182958340544896;
constexpr double kWPairEof = 0.5500477595827574;
constexpr double kWDeficit = kWEntropyA - 2.0 * kWPairEof;  // -0.18179968511102537

}  // namespace

TEST_SUITE("monogamy") {

TEST_CASE("closed-form discord on GHZ, W, and |000>") {
    CHECK(discord_via_kw(max_ghz(), 0, 1, 2) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(discord_via_kw(max_w(), 0, 1, 2) == doctest::Approx(kWPairEof).epsilon(1e-10));
    CHECK(discord_via_kw(ghz_class_state({1, 0, 0, 0, 0, 0}), 0, 1, 2) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(discord_via_kw(max_w(), 0, 0, 2), std::invalid_argument);
}

TEST_CASE("Koashi-Winter residuals on the named states") {
    for (const PureState& psi : {max_ghz(), max_w()}) {
        const KwResidual r = kw_residual(psi, 0, 1, 2);
        CHECK(r.cond_entropy_vs_eof <= 2e-6);
        CHECK(r.discord_vs_closed_form <= 2e-6);
    }
}

TEST_CASE("Koashi-Winter residuals on Haar states") {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const PureState psi = haar_random_pure(3, 40000 + seed);
        const KwResidual r = kw_residual(psi, 0, 1, 2);
        worst = std::max({worst, r.cond_entropy_vs_eof, r.discord_vs_closed_form});
    }
    CHECK(worst <= 1e-5);
}

TEST_CASE("monogamy deficits on the reference states") {
    CHECK(discord_monogamy_deficit(max_ghz(), 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(discord_monogamy_deficit(max_w(), 0) == doctest::Approx(kWDeficit).epsilon(1e-9));
    CHECK(eof_monogamy_deficit(max_w(), 0) == doctest::Approx(kWDeficit).epsilon(1e-9));

    // epsilon = 0 factorizes qubit A and the monogamy relation saturates
    for (double eps : {0.0, 0.4, 0.9}) {
        const PureState psi = psi_tilde({0.0, eps});
        CHECK(std::abs(discord_monogamy_deficit(psi, 0)) < 1e-10);
    }
}

TEST_CASE("discord and EoF deficits coincide on pure states") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PureState psi = haar_random_pure(3, 50000 + seed);
        CHECK(std::abs(discord_monogamy_deficit(psi, 0) - eof_monogamy_deficit(psi, 0)) <= 1e-9);
    }
}

TEST_CASE("biseparable W-class states saturate the monogamy relation") {
    // lambda2 = 0 removes the A-C entanglement
    GaussianRng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        double l0 = std::abs(rng.gaussian());
        double l1 = std::abs(rng.gaussian());
        double l3 = std::abs(rng.gaussian());
        const double inv = 1.0 / std::sqrt(l0 * l0 + l1 * l1 + l3 * l3);
        const PureState psi = w_class_state(l0 * inv, l1 * inv, 0.0, l3 * inv, 0.0);
        CHECK(std::abs(eof_monogamy_deficit(psi, 0)) < 1e-8);
    }
}

TEST_CASE("W-class states are never monogamous") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const PureState psi = ghz_class_state(random_w_class(60000 + seed));
        CHECK(eof_monogamy_deficit(psi, 0) <= 1e-8);
    }
}

TEST_CASE("interaction information vanishes on pure tripartite states") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const DensityMatrix rho = projector(haar_random_pure(3, 70000 + seed));
        CHECK(std::abs(interaction_information(rho, {{0}, {1}, {2}})) <= 1e-9);
    }
}

TEST_CASE("interaction information of product and classical states") {
    ComplexMatrix eighth = ComplexMatrix::identity(8);
    eighth *= cplx{0.125, 0.0};
    CHECK(interaction_information(DensityMatrix(eighth, 3), {{0}, {1}, {2}}) ==
          doctest::Approx(0.0).epsilon(1e-12));

    CHECK(interaction_information(classical_ghz_mixture(), {{0}, {1}, {2}}) ==
          doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("interaction information reduces to mutual information for two groups") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const DensityMatrix rho = random_density(3, 80000 + seed);
        const double ii = interaction_information(rho, {{0}, {1, 2}});
        const double mi = mutual_information(rho, {0}, {1, 2});
        CHECK(ii == doctest::Approx(mi).epsilon(1e-12));
    }
}

TEST_CASE("interaction information is invariant under group permutations") {
    const DensityMatrix rho = random_density(3, 81000);
    const double base = interaction_information(rho, {{0}, {1}, {2}});
    CHECK(std::abs(base - interaction_information(rho, {{2}, {0}, {1}})) < 1e-10);
    CHECK(std::abs(base - interaction_information(rho, {{1}, {2}, {0}})) < 1e-10);
}

TEST_CASE("interaction information rejects bad partitions") {
    const DensityMatrix rho = random_density(3, 82000);
    CHECK_THROWS_AS(interaction_information(rho, {{0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(interaction_information(rho, {{0}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(interaction_information(rho, {{0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("mutual information decomposition residual vanishes") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const DensityMatrix mixed = random_density(3, 90000 + seed);
        CHECK(mutual_info_decomposition_residual(mixed) <= 1e-10);
        const DensityMatrix pure = projector(haar_random_pure(3, 91000 + seed));
        CHECK(mutual_info_decomposition_residual(pure) <= 1e-10);
    }
    CHECK(mutual_info_decomposition_residual(classical_ghz_mixture()) <= 1e-10);
}

TEST_CASE("distributed discord equals distributed entanglement on pure states") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const MixedDiscordVsEof r =
            mixed_discord_vs_eof(projector(haar_random_pure(3, 95000 + seed)));
        CHECK(std::abs(r.slack) <= 2e-5);
        CHECK(std::abs(r.slack - (r.lhs - r.rhs)) < 1e-15);
    }
    // product states carry no correlations at all
    const DensityMatrix product(
        kron(random_density(1, 1).matrix(),
             kron(random_density(1, 2).matrix(), random_density(1, 3).matrix())),
        3);
    const MixedDiscordVsEof r = mixed_discord_vs_eof(product);
    CHECK(std::abs(r.lhs) < 2e-6);
    CHECK(std::abs(r.rhs) < 1e-9);
}

TEST_CASE("distributed discord stays above distributed EoF on strongly mixed states") {
    // Full-rank mixtures: entanglement of formation mostly collapses while
    // discord survives, so the slack is comfortably positive.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const MixedDiscordVsEof r = mixed_discord_vs_eof(random_density(3, 96000 + seed));
        CHECK(r.slack >= -2e-5);
    }
}

TEST_CASE("distributed discord can fall below distributed EoF near the pure boundary") {
    // Rank-2 mixture regression case; the value was confirmed with an
    // independent implementation (dense measurement scan + simplex polish,
    // separate eigensolver): D_AB + D_AC - E_AB - E_AC = -0.0281002344.
    // Any measurement-optimization shortfall only raises the left side, so a
    // negative slack of this size cannot be a numerical artifact.
    const DensityMatrix rho = sample_mixed_three_qubit(mix_seed(7, 0));
    const MixedDiscordVsEof r = mixed_discord_vs_eof(rho);
    CHECK(r.slack == doctest::Approx(-0.028100234393).epsilon(1e-6));
}

TEST_CASE("chain rule on Haar states") {
    int applicable = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const ChainRuleResult r = chain_rule_check(haar_random_pure(3, 97000 + seed));
        if (!r.applicable) continue;
        ++applicable;
        CHECK(r.holds);
    }
    CHECK(applicable > 450);  // degenerate marginals are rare under Haar sampling
}

TEST_CASE("chain rule on a relabeled W state") {
    // psi_tilde(0.7, 1) has S_A != S_B; the inequality must hold either way
    const ChainRuleResult r = chain_rule_check(psi_tilde({0.7, 1.0}));
    REQUIRE(r.applicable);
    CHECK(r.holds);
    CHECK(r.margin > 0.0);
}

TEST_CASE("chain rule skips symmetric states") {
    // Bell (x) |0> has S_A = S_B = 1 exactly
    const double r2 = 1.0 / std::sqrt(2.0);
    const PureState psi(3, {r2, 0, 0, 0, 0, 0, r2, 0});
    CHECK_FALSE(chain_rule_check(psi).applicable);
}

TEST_CASE("Luo bounds saturate on the Bell state") {
    const LuoReport r = luo_bound_report(projector(bell_phi_plus()), true);
    CHECK(r.D_AB == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.J_AB == doctest::Approx(1.0).epsilon(1e-6));
    for (double m : r.margins) CHECK(std::abs(m) <= 1e-6);
}

TEST_CASE("Luo margins of a product state equal min(S_A, S_B)") {
    const DensityMatrix rho_a = random_density(1, 11);
    const DensityMatrix rho_b = random_density(1, 12);
    const DensityMatrix joint(kron(rho_a.matrix(), rho_b.matrix()), 2);
    const LuoReport r = luo_bound_report(joint, false);
    const double bound = std::min(r.S_A, r.S_B);
    for (double m : r.margins) CHECK(m == doctest::Approx(bound).epsilon(1e-6));
}

TEST_CASE("Luo bounds hold on seeded rank-2 states") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const LuoReport r = luo_bound_report(random_rank2_two_qubit(98000 + seed), true);
        for (double m : r.margins) CHECK(m >= -2e-5);
        for (double v : {r.D_AB, r.D_BA, r.J_AB, r.J_BA}) CHECK(v >= -1e-9);
    }
}

TEST_CASE("Luo rank flag rejects full-rank states") {
    const DensityMatrix rho = random_density(2, 99000);
    REQUIRE(rho.eigenvalues()[2] > 1e-6);
    CHECK_THROWS_AS(luo_bound_report(rho, true), std::domain_error);
    CHECK_NOTHROW(luo_bound_report(rho, false));
}

TEST_CASE("discord and classical-correlation monogamies are complementary") {
    // D-deficit (closed form) = -(J-deficit), with J_{A,BC} = S_A on pure states
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const PureState psi = haar_random_pure(3, 99500 + seed);
        const double s_a = von_neumann_entropy(reduced_density(psi, {0}));
        const double d_deficit = discord_monogamy_deficit(psi, 0);
        const double j_ab = classical_correlations(reduced_density(psi, {0, 1}), MeasuredSide::B).value;
        const double j_ac = classical_correlations(reduced_density(psi, {0, 2}), MeasuredSide::B).value;
        const double j_deficit = s_a - j_ab - j_ac;
        CHECK(std::abs(d_deficit + j_deficit) <= 2e-5);
    }
}

TEST_CASE("monogamy report invariants") {
    const MonogamyReport r = monogamy_report("max-w", max_w());
    CHECK(std::abs(r.discord_deficit - (r.S_A - r.D_AB - r.D_AC)) <= 1e-9);
    CHECK(std::abs(r.violation + r.eof_deficit) <= 1e-12);
    CHECK(r.violation == doctest::Approx(-kWDeficit).epsilon(1e-9));
    CHECK(r.kw_residual_max <= 1e-5);
    CHECK(std::abs(r.interaction_info) <= 1e-9);
}

}  // TEST_SUITE
