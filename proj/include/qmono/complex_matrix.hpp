// complex_matrix.hpp
// Dense square complex matrices, the substrate for states and operators.
// Dimensions stay small (<= 16), so everything is plain row-major storage.

#pragma once

#include <complex>
#include <vector>

namespace qmono {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::vector<cplx> entries);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    cplx& operator()(int row, int col) { return entries_[static_cast<size_t>(row) * dim_ + col]; }
    const cplx& operator()(int row, int col) const {
        return entries_[static_cast<size_t>(row) * dim_ + col];
    }

    const std::vector<cplx>& data() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    cplx trace() const;

    // max entrywise |M - M^dagger|
    double hermiticity_error() const;
    double max_abs_diff(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scalar);

private:
    int dim_;
    std::vector<cplx> entries_;  // row-major, dim*dim
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scalar, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

}  // namespace qmono
