// density_matrix.hpp
// Validated quantum states: Hermitian, unit trace, positive semidefinite.
// The spectrum is computed once at construction (it is needed for the PSD
// check anyway) and kept for entropy, square roots and purification.

#pragma once

#include <vector>

#include "qmono/complex_matrix.hpp"

namespace qmono {

// Eigenvalue clamp window: values in [-kEigenClampFloor, 0) are treated as
// float noise and set to 0; anything below is rejected as genuinely invalid.
inline constexpr double kEigenClampFloor = 1e-8;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;

class DensityMatrix {
public:
    // Throws std::invalid_argument on dimension/Hermiticity/trace violations,
    // std::domain_error if an eigenvalue is below -1e-8.
    DensityMatrix(ComplexMatrix matrix, int num_qubits);

    int num_qubits() const { return num_qubits_; }
    int dim() const { return matrix_.dim(); }
    const ComplexMatrix& matrix() const { return matrix_; }

    // Clamped to [0, inf), sorted descending.
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    // Columns match eigenvalues().
    const ComplexMatrix& eigenvectors() const { return eigenvectors_; }

private:
    ComplexMatrix matrix_;
    int num_qubits_;
    std::vector<double> eigenvalues_;
    ComplexMatrix eigenvectors_;
};

}  // namespace qmono
