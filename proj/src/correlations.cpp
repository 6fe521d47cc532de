#include "qmono/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

#include "qmono/tensor.hpp"

namespace qmono {

namespace {

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Entropy of a 2x2 Hermitian PSD matrix with the given trace normalized out.
double entropy_2x2(const cplx& m00, const cplx& m01, const cplx& m11, double tr) {
    const double a = m00.real() / tr;
    const double d = m11.real() / tr;
    const double det = a * d - std::norm(m01) / (tr * tr);
    const double disc = std::sqrt(std::max(0.0, (a + d) * (a + d) - 4.0 * det));
    const double lo = std::clamp(0.5 * (a + d - disc), 0.0, 1.0);
    const double hi = std::clamp(0.5 * (a + d + disc), 0.0, 1.0);
    return -xlog2x(lo) - xlog2x(hi);
}

// Fold arbitrary Bloch angles back into theta in [0, pi], phi in [0, 2*pi).
MeasurementAngles canonical_angles(double theta, double phi) {
    const double two_pi = 2.0 * M_PI;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta > M_PI) {
        theta = two_pi - theta;
        phi += M_PI;
    }
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    return {theta, phi};
}

// Conditional entropy after measuring the given qubit in the V(theta, phi)
// basis. Works on the raw 4x4 matrix; angles may be any reals.
double conditional_entropy_raw(const ComplexMatrix& rho, double theta, double phi,
                               MeasuredSide measured) {
    const double ct = std::cos(0.5 * theta);
    const double st = std::sin(0.5 * theta);
    const cplx eip{std::cos(phi), std::sin(phi)};
    // Columns of V: the two projective basis vectors.
    const std::array<std::array<cplx, 2>, 2> basis = {{
        {cplx{ct, 0.0}, eip * st},
        {-std::conj(eip) * st, cplx{ct, 0.0}},
    }};

    double total = 0.0;
    for (const auto& e : basis) {
        // M[x][x'] = <e| rho |e> contracted over the measured qubit.
        cplx m00{0, 0}, m01{0, 0}, m11{0, 0};
        for (int b = 0; b < 2; ++b) {
            for (int bp = 0; bp < 2; ++bp) {
                const cplx w = std::conj(e[b]) * e[bp];
                if (measured == MeasuredSide::B) {
                    m00 += w * rho(b, bp);
                    m01 += w * rho(b, 2 + bp);
                    m11 += w * rho(2 + b, 2 + bp);
                } else {
                    m00 += w * rho(2 * b, 2 * bp);
                    m01 += w * rho(2 * b, 2 * bp + 1);
                    m11 += w * rho(2 * b + 1, 2 * bp + 1);
                }
            }
        }
        const double pj = m00.real() + m11.real();
        if (pj < 1e-12) continue;  // zero-probability branch contributes 0
        total += pj * entropy_2x2(m00, m01, m11, pj);
    }
    return total;
}

struct Optimum {
    double cond_entropy;
    MeasurementAngles angles;
};

// 64x64 grid scan followed by Nelder-Mead from the best grid point.
// Deterministic: the scan order breaks ties lexicographically in (theta, phi).
Optimum minimize_conditional_entropy(const ComplexMatrix& rho, MeasuredSide measured) {
    constexpr int kGrid = 64;
    double best = std::numeric_limits<double>::infinity();
    double best_theta = 0.0, best_phi = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double theta = M_PI * i / (kGrid - 1);
        for (int j = 0; j < kGrid; ++j) {
            const double phi = 2.0 * M_PI * j / kGrid;
            const double value = conditional_entropy_raw(rho, theta, phi, measured);
            if (value < best) {
                best = value;
                best_theta = theta;
                best_phi = phi;
            }
        }
    }

    // Nelder-Mead in the unconstrained (theta, phi) plane; evaluation folds
    // angles back, so the simplex can cross the boundaries freely.
    using Point = std::array<double, 2>;
    auto eval = [&](const Point& x) { return conditional_entropy_raw(rho, x[0], x[1], measured); };

    std::array<Point, 3> simplex = {{{best_theta, best_phi},
                                     {best_theta + M_PI / (kGrid - 1), best_phi},
                                     {best_theta, best_phi + 2.0 * M_PI / kGrid}}};
    std::array<double, 3> f = {eval(simplex[0]), eval(simplex[1]), eval(simplex[2])};

    constexpr double kDiameterTol = 1e-7;
    constexpr int kMaxIter = 400;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        // order so f[0] <= f[1] <= f[2]
        std::array<int, 3> idx = {0, 1, 2};
        std::sort(idx.begin(), idx.end(), [&f](int a, int b) { return f[a] < f[b]; });
        const std::array<Point, 3> sx = {simplex[idx[0]], simplex[idx[1]], simplex[idx[2]]};
        const std::array<double, 3> sf = {f[idx[0]], f[idx[1]], f[idx[2]]};
        simplex = sx;
        f = sf;

        double diameter = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b)
                diameter = std::max(diameter, std::hypot(simplex[a][0] - simplex[b][0],
                                                         simplex[a][1] - simplex[b][1]));
        if (diameter < kDiameterTol) break;

        const Point centroid = {0.5 * (simplex[0][0] + simplex[1][0]),
                                0.5 * (simplex[0][1] + simplex[1][1])};
        auto along = [&centroid](const Point& from, double scale) {
            return Point{centroid[0] + scale * (centroid[0] - from[0]),
                         centroid[1] + scale * (centroid[1] - from[1])};
        };

        const Point reflected = along(simplex[2], 1.0);
        const double fr = eval(reflected);
        if (fr < f[0]) {
            const Point expanded = along(simplex[2], 2.0);
            const double fe = eval(expanded);
            if (fe < fr) {
                simplex[2] = expanded;
                f[2] = fe;
            } else {
                simplex[2] = reflected;
                f[2] = fr;
            }
        } else if (fr < f[1]) {
            simplex[2] = reflected;
            f[2] = fr;
        } else {
            const bool outside = fr < f[2];
            const Point contracted = along(simplex[2], outside ? 0.5 : -0.5);
            const double fc = eval(contracted);
            if (fc < std::min(fr, f[2])) {
                simplex[2] = contracted;
                f[2] = fc;
            } else {
                for (int k = 1; k < 3; ++k) {
                    simplex[k] = {0.5 * (simplex[0][0] + simplex[k][0]),
                                  0.5 * (simplex[0][1] + simplex[k][1])};
                    f[k] = eval(simplex[k]);
                }
            }
        }
    }

    int best_vertex = 0;
    for (int k = 1; k < 3; ++k)
        if (f[k] < f[best_vertex]) best_vertex = k;
    if (f[best_vertex] < best) {
        return {f[best_vertex], canonical_angles(simplex[best_vertex][0], simplex[best_vertex][1])};
    }
    return {best, canonical_angles(best_theta, best_phi)};
}

void require_two_qubits(const DensityMatrix& rho, const char* who) {
    if (rho.num_qubits() != 2) {
        throw std::invalid_argument(std::string(who) + ": expected a two-qubit state");
    }
}

}  // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lambda : rho.eigenvalues()) s -= xlog2x(lambda);
    return s > 0.0 ? s : 0.0;  // eigenvalues at 1 + eps would otherwise leak -1e-16
}

double mutual_information(const DensityMatrix& rho, const std::vector<int>& part_a,
                          const std::vector<int>& part_b) {
    const int nq = rho.num_qubits();
    std::vector<bool> seen(nq, false);
    auto mark = [&](const std::vector<int>& part) {
        for (int q : part) {
            if (q < 0 || q >= nq) throw std::invalid_argument("mutual_information: qubit index out of range");
            if (seen[q]) throw std::invalid_argument("mutual_information: split parts overlap");
            seen[q] = true;
        }
    };
    mark(part_a);
    mark(part_b);
    for (bool s : seen)
        if (!s) throw std::invalid_argument("mutual_information: split must cover all qubits");

    return von_neumann_entropy(partial_trace(rho, part_a)) +
           von_neumann_entropy(partial_trace(rho, part_b)) - von_neumann_entropy(rho);
}

double mutual_information(const DensityMatrix& rho_ab) {
    require_two_qubits(rho_ab, "mutual_information");
    return mutual_information(rho_ab, {0}, {1});
}

double measured_conditional_entropy(const DensityMatrix& rho_ab, const MeasurementAngles& angles,
                                    MeasuredSide measured) {
    require_two_qubits(rho_ab, "measured_conditional_entropy");
    if (angles.theta < 0.0 || angles.theta > M_PI || angles.phi < 0.0 ||
        angles.phi >= 2.0 * M_PI) {
        throw std::invalid_argument(
            "measured_conditional_entropy: theta must lie in [0, pi], phi in [0, 2*pi)");
    }
    return conditional_entropy_raw(rho_ab.matrix(), angles.theta, angles.phi, measured);
}

ClassicalCorrelations classical_correlations(const DensityMatrix& rho_ab, MeasuredSide measured) {
    require_two_qubits(rho_ab, "classical_correlations");
    const std::vector<int> unmeasured = {measured == MeasuredSide::B ? 0 : 1};
    const double s_unmeasured = von_neumann_entropy(partial_trace(rho_ab, unmeasured));
    const Optimum opt = minimize_conditional_entropy(rho_ab.matrix(), measured);
    double value = s_unmeasured - opt.cond_entropy;
    if (value < 0.0 && value > -1e-9) value = 0.0;
    return {value, opt.angles};
}

DiscordResult quantum_discord(const DensityMatrix& rho_ab, MeasuredSide measured) {
    const double info = mutual_information(rho_ab);
    const ClassicalCorrelations cc = classical_correlations(rho_ab, measured);
    double discord = info - cc.value;
    if (discord < 0.0 && discord > -1e-9) discord = 0.0;
    return {discord, cc.value, info, cc.angles};
}

}  // namespace qmono
