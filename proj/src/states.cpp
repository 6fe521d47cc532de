#include "qmono/states.hpp"

#include <cmath>
#include <stdexcept>

#include "qmono/rng.hpp"
#include "qmono/tensor.hpp"

namespace qmono {

PureState ghz_class_state(const GhzClassParams& p) {
    const double lam[5] = {p.lambda0, p.lambda1, p.lambda2, p.lambda3, p.lambda4};
    double norm_sq = 0.0;
    for (double l : lam) {
        if (l < 0.0) throw std::invalid_argument("ghz_class_state: lambdas must be non-negative");
        norm_sq += l * l;
    }
    if (std::abs(norm_sq - 1.0) > 1e-10) {
        throw std::invalid_argument("ghz_class_state: sum of squared lambdas must be 1");
    }
    if (p.theta < 0.0 || p.theta > M_PI) {
        throw std::invalid_argument("ghz_class_state: theta must lie in [0, pi]");
    }
    std::vector<cplx> amps(8, cplx{0.0, 0.0});
    amps[0b000] = p.lambda0;
    amps[0b100] = p.lambda1 * cplx{std::cos(p.theta), std::sin(p.theta)};
    amps[0b101] = p.lambda2;
    amps[0b110] = p.lambda3;
    amps[0b111] = p.lambda4;
    return PureState(3, std::move(amps));
}

PureState w_class_state(double lambda0, double lambda1, double lambda2, double lambda3,
                        double theta) {
    return ghz_class_state({lambda0, lambda1, lambda2, lambda3, 0.0, theta});
}

PureState psi_tilde(const PsiTildeParams& params) {
    if (params.p < 0.0 || params.p > 1.0 || params.epsilon < 0.0 || params.epsilon > 1.0) {
        throw std::invalid_argument("psi_tilde: p and epsilon must lie in [0, 1]");
    }
    std::vector<cplx> amps(8, cplx{0.0, 0.0});
    amps[0b000] = std::sqrt(params.p * params.epsilon);
    amps[0b111] = std::sqrt(params.p * (1.0 - params.epsilon));
    amps[0b101] = std::sqrt((1.0 - params.p) / 2.0);
    amps[0b110] = amps[0b101];
    return PureState(3, std::move(amps));
}

PureState haar_random_pure(int num_qubits, std::uint64_t seed) {
    if (num_qubits < 1 || num_qubits > 4) {
        throw std::invalid_argument("haar_random_pure: num_qubits must be in {1,2,3,4}");
    }
    GaussianRng rng(seed);
    std::vector<cplx> amps(1ULL << num_qubits);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = rng.complex_gaussian();
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return PureState(num_qubits, std::move(amps));
}

DensityMatrix random_rank2_two_qubit(std::uint64_t seed) {
    return reduced_density(haar_random_pure(3, seed), {0, 1});
}

namespace {

GhzClassParams random_canonical(std::uint64_t seed, bool ghz_class) {
    GaussianRng rng(seed);
    double lam[5] = {0, 0, 0, 0, 0};
    const int count = ghz_class ? 5 : 4;
    double norm_sq = 0.0;
    for (int i = 0; i < count; ++i) {
        lam[i] = std::abs(rng.gaussian());
        norm_sq += lam[i] * lam[i];
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (int i = 0; i < count; ++i) lam[i] *= inv;
    const double theta = rng.uniform() * M_PI;
    return {lam[0], lam[1], lam[2], lam[3], lam[4], theta};
}

}  // namespace

GhzClassParams random_ghz_class(std::uint64_t seed) { return random_canonical(seed, true); }
GhzClassParams random_w_class(std::uint64_t seed) { return random_canonical(seed, false); }

PureState purify_rank2(const DensityMatrix& rho) {
    if (rho.num_qubits() != 2) {
        throw std::invalid_argument("purify_rank2: input must be a two-qubit state");
    }
    const auto& vals = rho.eigenvalues();
    if (vals[2] > kEigenClampFloor) {
        throw std::domain_error("purify_rank2: input has rank greater than 2");
    }

    // Phase convention: scale each eigenvector so its first component above
    // threshold is real positive.
    auto fixed_column = [&rho](int k) {
        std::vector<cplx> col(4);
        for (int r = 0; r < 4; ++r) col[r] = rho.eigenvectors()(r, k);
        for (const cplx& c : col) {
            const double mag = std::abs(c);
            if (mag > 1e-12) {
                const cplx correction = std::conj(c) / mag;
                for (auto& e : col) e *= correction;
                break;
            }
        }
        return col;
    };

    const auto u1 = fixed_column(0);
    const auto u2 = fixed_column(1);
    const double w1 = std::sqrt(std::max(vals[0], 0.0));
    const double w2 = vals[1] > 1e-13 ? std::sqrt(vals[1]) : 0.0;  // noise floor

    std::vector<cplx> amps(8, cplx{0.0, 0.0});
    double norm_sq = 0.0;
    for (int j = 0; j < 4; ++j) {
        amps[2 * j] = w1 * u1[j];
        amps[2 * j + 1] = w2 * u2[j];
        norm_sq += std::norm(amps[2 * j]) + std::norm(amps[2 * j + 1]);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return PureState(3, std::move(amps));
}

DensityMatrix projector(const PureState& psi) {
    const int d = psi.dim();
    ComplexMatrix m(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m(r, c) = psi.amplitude(r) * std::conj(psi.amplitude(c));
    return DensityMatrix(std::move(m), psi.num_qubits());
}

DensityMatrix reduced_density(const PureState& psi, const std::vector<int>& keep) {
    return partial_trace(projector(psi), keep);
}

}  // namespace qmono
