#include "qmono/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qmono/states.hpp"
#include "qmono/tensor.hpp"

namespace qmono {

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("binary_entropy: x must lie in [0, 1]");
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

ComplexMatrix spin_flip(const DensityMatrix& rho_2q) {
    if (rho_2q.num_qubits() != 2) {
        throw std::invalid_argument("spin_flip: expected a two-qubit state");
    }
    const ComplexMatrix yy = kron(pauli_y(), pauli_y());
    return yy * rho_2q.matrix().conjugate() * yy;
}

double concurrence(const DensityMatrix& rho_2q) {
    const ComplexMatrix flipped = spin_flip(rho_2q);

    // Nonzero eigenvalues of sqrt(rho) rho~ sqrt(rho) are those of its
    // restriction to the range of rho: G_ij = sqrt(l_i l_j) <v_i| rho~ |v_j>.
    // Restricting keeps exact zeros exact; eigenvalue noise below the rank
    // cutoff would otherwise surface as ~1e-6 junk after the square root.
    constexpr double kRankCutoff = 1e-10;
    const auto& vals = rho_2q.eigenvalues();
    const auto& vecs = rho_2q.eigenvectors();
    int rank = 0;
    while (rank < 4 && vals[rank] > kRankCutoff) ++rank;
    if (rank == 0) rank = 1;

    ComplexMatrix g(rank);
    for (int i = 0; i < rank; ++i) {
        for (int j = 0; j < rank; ++j) {
            cplx inner{0.0, 0.0};
            for (int r = 0; r < 4; ++r) {
                cplx row{0.0, 0.0};
                for (int c = 0; c < 4; ++c) row += flipped(r, c) * vecs(c, j);
                inner += std::conj(vecs(r, i)) * row;
            }
            g(i, j) = std::sqrt(vals[i] * vals[j]) * inner;
        }
    }
    // g is Hermitian up to rounding; symmetrize before decomposing
    ComplexMatrix h(rank);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < rank; ++c) h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));

    const EigenSystem eig = hermitian_eigen(h);
    double value = 0.0;
    for (int k = 0; k < rank; ++k) {
        // Zero-tangle states have exact zeros in this spectrum; eigenvalues at
        // the 1e-16 noise floor would inject sqrt-amplified ~1e-8 junk.
        const double mu = eig.eigenvalues[k] > 1e-13 ? eig.eigenvalues[k] : 0.0;
        value += (k == 0) ? std::sqrt(mu) : -std::sqrt(mu);
    }
    return std::max(0.0, value);
}

double eof(const DensityMatrix& rho_2q) {
    const double c = concurrence(rho_2q);
    const double c_sq = std::min(c * c, 1.0);
    return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c_sq)));
}

EntanglementValues entanglement_values(const DensityMatrix& rho_2q) {
    const double c = concurrence(rho_2q);
    const double c_sq = std::min(c * c, 1.0);
    return {c, c_sq, binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c_sq)))};
}

namespace {

void require_pure_3q(const PureState& psi, const char* who) {
    if (psi.num_qubits() != 3) {
        throw std::invalid_argument(std::string(who) + ": expected a three-qubit pure state");
    }
}

}  // namespace

double concurrence_sq_pure_bipartition(const PureState& psi_3q, int focus) {
    require_pure_3q(psi_3q, "concurrence_sq_pure_bipartition");
    if (focus < 0 || focus > 2) {
        throw std::invalid_argument("concurrence_sq_pure_bipartition: focus out of range");
    }
    const DensityMatrix reduced = reduced_density(psi_3q, {focus});
    const ComplexMatrix& m = reduced.matrix();
    const double det = m(0, 0).real() * m(1, 1).real() - std::norm(m(0, 1));
    return std::clamp(4.0 * det, 0.0, 1.0);
}

double three_tangle(const PureState& psi_3q, int focus) {
    require_pure_3q(psi_3q, "three_tangle");
    if (focus < 0 || focus > 2) throw std::invalid_argument("three_tangle: focus out of range");
    const int j = focus == 0 ? 1 : 0;
    const int k = focus == 2 ? 1 : 2;

    const double c_sq_rest = concurrence_sq_pure_bipartition(psi_3q, focus);
    const double c_j = concurrence(reduced_density(psi_3q, {focus, j}));
    const double c_k = concurrence(reduced_density(psi_3q, {focus, k}));
    double tangle = c_sq_rest - c_j * c_j - c_k * c_k;
    if (tangle < 0.0 && tangle > -1e-9) tangle = 0.0;
    return tangle;
}

}  // namespace qmono
