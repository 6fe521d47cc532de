// tensor.hpp
// Tensor products, partial traces, Hermitian eigendecomposition and PSD
// square roots for the small dense matrices this project works with.
//
// Qubit ordering is big-endian throughout: qubit 0 is the most significant
// bit of a computational-basis index.

#pragma once

#include <vector>

#include "qmono/complex_matrix.hpp"
#include "qmono/density_matrix.hpp"

namespace qmono {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenSystem {
    std::vector<double> eigenvalues;  // descending
    ComplexMatrix eigenvectors;       // columns match eigenvalues
};

// Cyclic Jacobi rotations; converges when the off-diagonal Frobenius norm
// drops below 1e-12. Throws std::invalid_argument for non-Hermitian input.
EigenSystem hermitian_eigen(const ComplexMatrix& h);

// Reduced state on the qubits in `keep`, in the order given (keep[0] becomes
// the most significant qubit of the result).
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep);

ComplexMatrix psd_sqrt(const DensityMatrix& rho);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qmono
