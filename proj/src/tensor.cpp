#include "qmono/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qmono {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int na = a.dim();
    const int nb = b.dim();
    ComplexMatrix out(na * nb);
    for (int ra = 0; ra < na; ++ra)
        for (int ca = 0; ca < na; ++ca) {
            const cplx v = a(ra, ca);
            if (v == cplx{0.0, 0.0}) continue;
            for (int rb = 0; rb < nb; ++rb)
                for (int cb = 0; cb < nb; ++cb)
                    out(ra * nb + rb, ca * nb + cb) = v * b(rb, cb);
        }
    return out;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    const int n = a.dim();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (r != c) sum += std::norm(a(r, c));
    return std::sqrt(sum);
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h) {
    if (h.hermiticity_error() > kHermitianTol) {
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian");
    }
    const int n = h.dim();

    // Work on the exactly Hermitian part; the asymmetry is below tolerance.
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr double kOffTol = 1e-12;
    constexpr int kMaxSweeps = 100;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= kOffTol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < 1e-300) continue;

                // Unitary that zeroes the (p,q) element of the 2x2 block:
                // U = [[c, s*phase], [-s*conj(phase), c]], phase = apq/|apq|.
                const cplx phase = apq / mag;
                const double theta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx sp = s * phase;
                const cplx spc = s * std::conj(phase);

                // Columns: A <- A*U, V <- V*U.
                for (int r = 0; r < n; ++r) {
                    const cplx arp = a(r, p), arq = a(r, q);
                    a(r, p) = c * arp - spc * arq;
                    a(r, q) = sp * arp + c * arq;
                    const cplx vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = c * vrp - spc * vrq;
                    v(r, q) = sp * vrp + c * vrq;
                }
                // Rows: A <- U^dagger * A.
                for (int col = 0; col < n; ++col) {
                    const cplx apc = a(p, col), aqc = a(q, col);
                    a(p, col) = c * apc - sp * aqc;
                    a(q, col) = spc * apc + c * aqc;
                }
                a(p, q) = cplx{0.0, 0.0};
                a(q, p) = cplx{0.0, 0.0};
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&a](int i, int j) { return a(i, i).real() > a(j, j).real(); });

    EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<int>& keep) {
    const int nq = rho.num_qubits();
    if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
    std::vector<bool> seen(nq, false);
    for (int q : keep) {
        if (q < 0 || q >= nq) throw std::invalid_argument("partial_trace: qubit index out of range");
        if (seen[q]) throw std::invalid_argument("partial_trace: repeated qubit index");
        seen[q] = true;
    }

    std::vector<int> traced;
    for (int q = 0; q < nq; ++q)
        if (!seen[q]) traced.push_back(q);

    const int nk = static_cast<int>(keep.size());
    const int nt = static_cast<int>(traced.size());
    const int dk = 1 << nk;
    const int dt = 1 << nt;

    // bit position (from MSB) of qubit q in a full index
    auto full_bit = [nq](int q) { return nq - 1 - q; };

    ComplexMatrix out(dk);
    for (int i = 0; i < dk; ++i) {
        for (int j = 0; j < dk; ++j) {
            int base_i = 0, base_j = 0;
            for (int pos = 0; pos < nk; ++pos) {
                base_i |= ((i >> (nk - 1 - pos)) & 1) << full_bit(keep[pos]);
                base_j |= ((j >> (nk - 1 - pos)) & 1) << full_bit(keep[pos]);
            }
            cplx sum{0.0, 0.0};
            for (int m = 0; m < dt; ++m) {
                int fi = base_i, fj = base_j;
                for (int pos = 0; pos < nt; ++pos) {
                    const int bit = (m >> (nt - 1 - pos)) & 1;
                    fi |= bit << full_bit(traced[pos]);
                    fj |= bit << full_bit(traced[pos]);
                }
                sum += rho.matrix()(fi, fj);
            }
            out(i, j) = sum;
        }
    }
    return DensityMatrix(std::move(out), nk);
}

ComplexMatrix psd_sqrt(const DensityMatrix& rho) {
    const int n = rho.dim();
    const auto& vals = rho.eigenvalues();
    const auto& vecs = rho.eigenvectors();
    ComplexMatrix out(n);
    for (int k = 0; k < n; ++k) {
        if (vals[k] <= 1e-13) continue;  // noise-floor eigenvalues would sqrt-amplify
        const double root = std::sqrt(vals[k]);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out(r, c) += root * vecs(r, k) * std::conj(vecs(c, k));
    }
    return out;
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = cplx{0.0, -1.0};
    m(1, 0) = cplx{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

}  // namespace qmono
