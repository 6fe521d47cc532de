#include "qmono/density_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qmono/tensor.hpp"

namespace qmono {

DensityMatrix::DensityMatrix(ComplexMatrix matrix, int num_qubits)
    : matrix_(std::move(matrix)), num_qubits_(num_qubits), eigenvectors_(matrix_.dim()) {
    if (num_qubits_ <= 0) {
        throw std::invalid_argument("DensityMatrix: num_qubits must be positive");
    }
    if (matrix_.dim() != (1 << num_qubits_)) {
        throw std::invalid_argument("DensityMatrix: dimension must equal 2^num_qubits");
    }
    if (matrix_.hermiticity_error() > kHermitianTol) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - cplx{1.0, 0.0}) > kTraceTol) {
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    }

    EigenSystem eig = hermitian_eigen(matrix_);
    for (double& lambda : eig.eigenvalues) {
        if (lambda < -kEigenClampFloor) {
            throw std::domain_error("DensityMatrix: negative eigenvalue beyond clamp window");
        }
        if (lambda < 0.0) lambda = 0.0;
    }
    eigenvalues_ = std::move(eig.eigenvalues);
    eigenvectors_ = std::move(eig.eigenvectors);
}

}  // namespace qmono
