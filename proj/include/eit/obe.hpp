#pragma once

#include <Eigen/Dense>
#include <complex>

#include "eit/params.hpp"

namespace eit {

using Matrix3c = Eigen::Matrix3cd;
using Matrix9d = Eigen::Matrix<double, 9, 9>;
using Vector9d = Eigen::Matrix<double, 9, 1>;
using Matrix9c = Eigen::Matrix<std::complex<double>, 9, 9>;
using Vector9c = Eigen::Matrix<std::complex<double>, 9, 1>;

// Density matrix of the three-level system, basis order (1, 2, 3).
class DensityMatrix3 {
public:
    DensityMatrix3() { rho_.setZero(); }
    explicit DensityMatrix3(const Matrix3c& rho) : rho_(rho) {}

    static DensityMatrix3 ground_state(int level);  // |level><level|, 1-based
    static DensityMatrix3 maximally_mixed();

    const Matrix3c& matrix() const { return rho_; }
    std::complex<double>& operator()(int i, int j) { return rho_(i, j); }
    std::complex<double> operator()(int i, int j) const { return rho_(i, j); }

    double hermiticity_defect() const;   // max |rho - rho^dagger|
    double trace_defect() const;         // |Tr rho - 1|
    double min_eigenvalue() const;

    // Hermitian to 1e-12, unit trace to 1e-12, eigenvalues >= -1e-10.
    bool is_physical() const;

private:
    Matrix3c rho_;
};

// Real-linear generator of the optical Bloch equations acting on the
// vectorized density matrix.  Component order:
//   (rho11, rho22, rho33, Re rho12, Im rho12, Re rho13, Im rho13,
//    Re rho23, Im rho23)
struct Liouvillian {
    Matrix9d matrix;
    Topology topology = Topology::Lambda;
    // Kept so steady_state can check population conservation.
    double gamma_total = 0.0, gamma_1 = 0.0, gamma_2 = 0.0;
    bool closed = true;

    Vector9d apply(const Vector9d& v) const { return matrix * v; }
};

Vector9d vectorize(const DensityMatrix3& rho);
DensityMatrix3 devectorize(const Vector9d& v);

// Generator of the Bloch equations for the given configuration.  Ladder
// topology feeds level 3 from level 2 instead of draining 3 into 2.
Liouvillian build_liouvillian(const ValidatedConfig& cfg);

// The same generator extended complex-linearly to arbitrary (not necessarily
// Hermitian) 3x3 operators, in column-stacked vec() order.  Used by the
// cooling resolvent.
Matrix9c build_liouvillian_complex(const ValidatedConfig& cfg);

// Unique steady state: solves L(rho) = 0 with Tr rho = 1 by replacing the
// rho11 row with the normalization condition.  Dense LU in extended
// precision with one refinement pass.  Throws NumericError when the steady
// state is not unique (e.g. both drives off in a Lambda system) and when
// population is not conserved (open atom).
DensityMatrix3 steady_state(const Liouvillian& L);

// Fixed-step RK4 integration of rho' = L(rho).  dt <= 0.05 / (largest rate
// or detuning) keeps the scheme stable; pass dt = 0 to pick that bound
// automatically.  Throws NumericError if the state blows up or, for closed
// atoms, if the trace drifts beyond 1e-8.
DensityMatrix3 evolve(const Liouvillian& L, const DensityMatrix3& rho0,
                      double t_final, double dt = 0.0);

// rho33.
double excited_population(const DensityMatrix3& rho);

// Largest stability-relevant scale of a config (rates, Rabi frequencies,
// detunings); 1/this is the natural time step unit.
double max_rate(const ValidatedConfig& cfg);

}  // namespace eit
