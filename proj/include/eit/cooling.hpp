#pragma once

#include <Eigen/Dense>
#include <vector>

#include "eit/obe.hpp"
#include "eit/params.hpp"
#include "eit/scan.hpp"

namespace eit {

// Trapped-atom cooling inputs: the free-atom drive plus trap frequency,
// Lamb-Dicke parameters for the two transitions, and emission-pattern
// coefficients (1/3 for isotropic emission).
struct CoolingParams {
    SystemConfig cfg{};
    double nu = 0.0;
    double eta1 = 0.0;
    double eta2 = 0.0;
    double alpha1 = 1.0 / 3.0;
    double alpha2 = 1.0 / 3.0;
};

// Violated invariants (hard errors), e.g. nu <= 0; eta above the
// Lamb-Dicke range (> 0.3) is reported by warnings() instead.
std::vector<std::string> check_cooling_params(const CoolingParams& p);
std::vector<std::string> cooling_warnings(const CoolingParams& p);

struct CoolingRates {
    double a_plus = 0.0;   // heating coefficient
    double a_minus = 0.0;  // cooling coefficient
    double q = 0.0;        // a_plus / a_minus
    double n_bar = 0.0;    // q / (1 - q); +inf when q >= 1
    bool cooling = false;  // 0 <= q < 1
    double im_residue = 0.0;  // largest imaginary residue of the flux traces
};

// Internal-state part of the first-sideband coupling:
// eta1 (W1/2)(|3><1| - |1><3|) + eta2 (W2/2)(|3><2| - |2><3|).
// Real and antisymmetric.
Eigen::Matrix3d sideband_operator(const ValidatedConfig& cfg, double eta1,
                                  double eta2);

// Re Tr[2 V (L + i nu_signed)^-1 (V rho)] with the resolvent applied in the
// complex vectorization; also returns the imaginary residue of the trace.
struct SidebandFlux {
    double real = 0.0;
    double imag = 0.0;
};
SidebandFlux sideband_flux(const Matrix9c& L_complex,
                           const Eigen::Matrix3d& V, const DensityMatrix3& rho,
                           double nu_signed);

// Heating/cooling coefficients to lowest order in the Lamb-Dicke
// parameters:
//   A_pm = (G1 a1 eta1^2 + G2 a2 eta2^2) rho33
//          + Re Tr[2 V (L -/+ i nu)^-1 V rho]
// The resolvent sign pairing (A_plus with -i nu) is fixed by requiring that
// a drive whose red sideband sits on the two-photon peak cools (q < 1).
// q >= 1 is reported as heating, not an error.
CoolingRates cooling_rates(const CoolingParams& p);

// Truncated thermal phonon distribution p_n ~ (1-q) q^n, renormalized over
// n <= n_max.  Requires 0 <= q < 1.
struct PhononDistribution {
    std::vector<double> p;
    double mean = 0.0;
    double truncation_error = 0.0;  // weight beyond n_max before renormalizing
};
PhononDistribution steady_state_thermal(const CoolingRates& rates, int n_max);

// 1/q over a (delta_2, omega_2) grid.  At each point the probe detuning is
// set so the red sideband sits on the located two-photon peak
// (delta = delta_peak - nu), the tracking policy used for the selective
// excitation surface.
SpectralScan scan_cooling(const CoolingParams& tmpl, const GridAxis& axis1,
                          const GridAxis& axis2,
                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace eit
