// pure_state.hpp
// Normalized amplitude vectors over n qubits (big-endian index convention).

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qmono/complex_matrix.hpp"

namespace qmono {

class PureState {
public:
    PureState(int num_qubits, std::vector<cplx> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
        if (num_qubits_ <= 0) {
            throw std::invalid_argument("PureState: num_qubits must be positive");
        }
        if (amplitudes_.size() != (1ULL << num_qubits_)) {
            throw std::invalid_argument("PureState: amplitude vector must have 2^num_qubits entries");
        }
        double norm_sq = 0.0;
        for (const auto& a : amplitudes_) norm_sq += std::norm(a);
        if (std::abs(norm_sq - 1.0) > 1e-10) {
            throw std::invalid_argument("PureState: squared norm must be 1");
        }
    }

    int num_qubits() const { return num_qubits_; }
    int dim() const { return 1 << num_qubits_; }
    const std::vector<cplx>& amplitudes() const { return amplitudes_; }
    cplx amplitude(int basis_index) const { return amplitudes_[static_cast<size_t>(basis_index)]; }

    // |<this|other>|^2
    double fidelity(const PureState& other) const {
        if (other.num_qubits_ != num_qubits_) {
            throw std::invalid_argument("PureState::fidelity: qubit count mismatch");
        }
        cplx overlap{0.0, 0.0};
        for (size_t i = 0; i < amplitudes_.size(); ++i)
            overlap += std::conj(amplitudes_[i]) * other.amplitudes_[i];
        return std::norm(overlap);
    }

private:
    int num_qubits_;
    std::vector<cplx> amplitudes_;
};

}  // namespace qmono
