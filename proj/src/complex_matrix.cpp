#include "qmono/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qmono {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
    if (dim <= 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
    entries_.assign(static_cast<size_t>(dim) * dim, cplx{0.0, 0.0});
}

ComplexMatrix::ComplexMatrix(int dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim <= 0) {
        throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    }
    if (entries_.size() != static_cast<size_t>(dim) * dim) {
        throw std::invalid_argument("ComplexMatrix: entries array must have dim^2 elements");
    }
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) out(r, c) = std::conj((*this)(r, c));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::hermiticity_error() const {
    double worst = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (other.dim_ != dim_) {
        throw std::invalid_argument("ComplexMatrix::max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (size_t i = 0; i < entries_.size(); ++i)
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    return worst;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (other.dim_ != dim_) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    for (size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(cplx scalar, ComplexMatrix m) { return m *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.dim() != rhs.dim()) throw std::invalid_argument("ComplexMatrix: dimension mismatch");
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const cplx v = lhs(r, k);
            if (v == cplx{0.0, 0.0}) continue;
            for (int c = 0; c < n; ++c) out(r, c) += v * rhs(k, c);
        }
    }
    return out;
}

}  // namespace qmono
