#include "eit/obe.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>

#include "eit/errors.hpp"

namespace eit {

namespace {

using Matrix9ld = Eigen::Matrix<long double, 9, 9>;
using Vector9ld = Eigen::Matrix<long double, 9, 1>;

constexpr double kClosureTol = 1e-12;

}  // namespace

DensityMatrix3 DensityMatrix3::ground_state(int level) {
    Matrix3c m = Matrix3c::Zero();
    m(level - 1, level - 1) = 1.0;
    return DensityMatrix3(m);
}

DensityMatrix3 DensityMatrix3::maximally_mixed() {
    return DensityMatrix3(Matrix3c::Identity() / 3.0);
}

double DensityMatrix3::hermiticity_defect() const {
    return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix3::trace_defect() const {
    return std::abs(rho_.trace() - std::complex<double>(1.0, 0.0));
}

double DensityMatrix3::min_eigenvalue() const {
    Matrix3c h = 0.5 * (rho_ + rho_.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(h);
    return es.eigenvalues().minCoeff();
}

bool DensityMatrix3::is_physical() const {
    return hermiticity_defect() <= 1e-12 && trace_defect() <= 1e-12 &&
           min_eigenvalue() >= -1e-10;
}

Vector9d vectorize(const DensityMatrix3& rho) {
    const Matrix3c& m = rho.matrix();
    Vector9d v;
    v[0] = m(0, 0).real();
    v[1] = m(1, 1).real();
    v[2] = m(2, 2).real();
    v[3] = m(0, 1).real();
    v[4] = m(0, 1).imag();
    v[5] = m(0, 2).real();
    v[6] = m(0, 2).imag();
    v[7] = m(1, 2).real();
    v[8] = m(1, 2).imag();
    return v;
}

DensityMatrix3 devectorize(const Vector9d& v) {
    Matrix3c m;
    m(0, 0) = v[0];
    m(1, 1) = v[1];
    m(2, 2) = v[2];
    m(0, 1) = {v[3], v[4]};
    m(0, 2) = {v[5], v[6]};
    m(1, 2) = {v[7], v[8]};
    m(1, 0) = std::conj(m(0, 1));
    m(2, 0) = std::conj(m(0, 2));
    m(2, 1) = std::conj(m(1, 2));
    return DensityMatrix3(m);
}

Liouvillian build_liouvillian(const ValidatedConfig& cfg) {
    const AtomParams& a = cfg.atom();
    const LaserDrive& d = cfg.drive();
    const CoherenceModel& c = cfg.coherence();

    const double G = a.gamma_total, G1 = a.gamma_1, G2 = a.gamma_2;
    const double W1 = d.omega_1, W2 = d.omega_2;
    const double D1 = d.delta_1, D2 = d.delta_2;
    const double G13 = c.gamma_13, G23 = c.gamma_23, g = c.gamma_12;
    const double delta = D1 - D2;

    Matrix9d L = Matrix9d::Zero();

    // Populations.  Component order: see Liouvillian in the header.
    L(0, 2) = G1;
    L(0, 6) = -W1;
    if (cfg.topology() == Topology::Lambda) {
        L(1, 2) = G2;
    } else {
        L(1, 1) = -G2;  // level 2 decays into 3
        L(2, 1) = G2;
    }
    L(1, 8) = -W2;
    L(2, 2) = -G;
    L(2, 6) = W1;
    L(2, 8) = W2;

    // rho12
    L(3, 3) = -g;
    L(3, 4) = delta;
    L(3, 6) = -W2 / 2.0;
    L(3, 8) = -W1 / 2.0;
    L(4, 3) = -delta;
    L(4, 4) = -g;
    L(4, 5) = W2 / 2.0;
    L(4, 7) = -W1 / 2.0;

    // rho13
    L(5, 4) = -W2 / 2.0;
    L(5, 5) = -G13;
    L(5, 6) = D1;
    L(6, 0) = W1 / 2.0;
    L(6, 2) = -W1 / 2.0;
    L(6, 3) = W2 / 2.0;
    L(6, 5) = -D1;
    L(6, 6) = -G13;

    // rho23
    L(7, 4) = W1 / 2.0;
    L(7, 7) = -G23;
    L(7, 8) = D2;
    L(8, 1) = W2 / 2.0;
    L(8, 2) = -W2 / 2.0;
    L(8, 3) = W1 / 2.0;
    L(8, 7) = -D2;
    L(8, 8) = -G23;

    Liouvillian out;
    out.matrix = L;
    out.topology = cfg.topology();
    out.gamma_total = G;
    out.gamma_1 = G1;
    out.gamma_2 = G2;
    out.closed = a.closed;
    return out;
}

Matrix9c build_liouvillian_complex(const ValidatedConfig& cfg) {
    const AtomParams& a = cfg.atom();
    const LaserDrive& d = cfg.drive();
    const CoherenceModel& c = cfg.coherence();
    const std::complex<double> i1(0.0, 1.0);

    Eigen::Matrix3d H;
    H << d.delta_1, 0.0, d.omega_1 / 2.0,
         0.0, d.delta_2, d.omega_2 / 2.0,
         d.omega_1 / 2.0, d.omega_2 / 2.0, 0.0;

    // Column-stacked vec(): index(row, col) = 3*col + row.
    auto idx = [](int r, int col) { return 3 * col + r; };

    Matrix9c L = Matrix9c::Zero();
    // -i (H M - M H) term: vec(HM) = (I (x) H) vec, vec(MH) = (H^T (x) I) vec.
    for (int col = 0; col < 3; ++col)
        for (int r = 0; r < 3; ++r)
            for (int k = 0; k < 3; ++k) {
                L(idx(r, col), idx(k, col)) -= i1 * H(r, k);
                L(idx(r, col), idx(r, k)) += i1 * H(k, col);
            }

    // Coherence decay.
    L(idx(0, 2), idx(0, 2)) -= c.gamma_13;
    L(idx(2, 0), idx(2, 0)) -= c.gamma_13;
    L(idx(1, 2), idx(1, 2)) -= c.gamma_23;
    L(idx(2, 1), idx(2, 1)) -= c.gamma_23;
    L(idx(0, 1), idx(0, 1)) -= c.gamma_12;
    L(idx(1, 0), idx(1, 0)) -= c.gamma_12;

    // Population transfer.
    L(idx(2, 2), idx(2, 2)) -= a.gamma_total;
    L(idx(0, 0), idx(2, 2)) += a.gamma_1;
    if (cfg.topology() == Topology::Lambda) {
        L(idx(1, 1), idx(2, 2)) += a.gamma_2;
    } else {
        L(idx(1, 1), idx(1, 1)) -= a.gamma_2;
        L(idx(2, 2), idx(1, 1)) += a.gamma_2;
    }
    return L;
}

DensityMatrix3 steady_state(const Liouvillian& L) {
    const double scale = std::max(L.gamma_total, 1.0);
    if (L.topology == Topology::Lambda) {
        if (std::abs(L.gamma_total - L.gamma_1 - L.gamma_2) > kClosureTol * scale)
            throw NumericError("open system unsupported in steady state");
    } else {
        if (std::abs(L.gamma_total - L.gamma_1) > kClosureTol * scale)
            throw NumericError("open system unsupported in steady state");
    }

    // Row 0 (the rho11 equation) is redundant for a closed atom; replace it
    // with the normalization Tr rho = 1.
    Matrix9ld A = L.matrix.cast<long double>();
    A.row(0).setZero();
    A(0, 0) = A(0, 1) = A(0, 2) = 1.0L;
    Vector9ld b = Vector9ld::Zero();
    b[0] = 1.0L;

    Eigen::PartialPivLU<Matrix9ld> lu(A);
    const auto diag = lu.matrixLU().diagonal().cwiseAbs();
    const long double pivot_max = diag.maxCoeff();
    const long double pivot_min = diag.minCoeff();
    if (!(pivot_max > 0.0L) || pivot_min < 1e-16L * pivot_max)
        throw NumericError("non-unique steady state");

    Vector9ld x = lu.solve(b);
    x += lu.solve(b - A * x);  // one refinement pass

    Vector9d xd = x.cast<double>();
    if (!xd.allFinite()) throw NumericError("steady-state solve diverged");
    return devectorize(xd);
}

DensityMatrix3 evolve(const Liouvillian& L, const DensityMatrix3& rho0,
                      double t_final, double dt) {
    if (t_final < 0.0) throw PreconditionError("t_final negative");
    const double scale = L.matrix.cwiseAbs().maxCoeff();
    const double dt_max = scale > 0.0 ? 0.05 / scale : t_final;
    if (dt <= 0.0) dt = dt_max;
    if (dt > dt_max && dt_max > 0.0) dt = dt_max;
    if (t_final == 0.0) return rho0;

    const long n = std::max(1L, static_cast<long>(std::ceil(t_final / dt)));
    const double h = t_final / static_cast<double>(n);

    Vector9d v = vectorize(rho0);
    const Matrix9d& M = L.matrix;
    for (long i = 0; i < n; ++i) {
        const Vector9d k1 = M * v;
        const Vector9d k2 = M * (v + 0.5 * h * k1);
        const Vector9d k3 = M * (v + 0.5 * h * k2);
        const Vector9d k4 = M * (v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }

    if (!v.allFinite()) throw NumericError("integration instability");
    if (L.closed) {
        const double trace = v[0] + v[1] + v[2];
        if (std::abs(trace - 1.0) > 1e-8)
            throw NumericError("integration instability: trace drift");
    }
    return devectorize(v);
}

double excited_population(const DensityMatrix3& rho) {
    return rho.matrix()(2, 2).real();
}

double max_rate(const ValidatedConfig& cfg) {
    const auto& a = cfg.atom();
    const auto& d = cfg.drive();
    const auto& c = cfg.coherence();
    return std::max({a.gamma_total, a.gamma_1, a.gamma_2, c.gamma_13,
                     c.gamma_23, c.gamma_12, d.omega_1, d.omega_2,
                     std::abs(d.delta_1), std::abs(d.delta_2)});
}

}  // namespace eit
