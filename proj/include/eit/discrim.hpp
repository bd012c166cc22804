#pragma once

#include <string>

#include "eit/analytic.hpp"
#include "eit/params.hpp"
#include "eit/scan.hpp"

namespace eit {

enum class ScenarioKind {
    SinglePhotonBenchmark,
    ResonantLambda,
    TwoLambdaOffset,
    DegenerateCoupling
};

// Two three-level manifolds driven by the same laser pair.  B is the one we
// want to excite, D the one to suppress.  When the Raman detuning is delta
// in B it is delta - Z in D.  C1, C2 scale the B-manifold couplings
// relative to D (degenerate-coupling case).
struct DiscriminationScenario {
    ScenarioKind kind = ScenarioKind::TwoLambdaOffset;
    double Z = 0.0;
    double C1 = 1.0;
    double C2 = 1.0;
    SystemConfig cfg{};  // D-manifold parameters
};

// Excitation ratio for two narrow single-photon transitions separated by Z,
// driven by a laser of the given linewidth: (2 Z / linewidth)^2 + 1.
double benchmark_single_photon_r(double Z, double laser_linewidth);

// Discrimination at resonance (both detunings zero): the three-level
// manifold is dark, the two-level manifold (Rabi frequency C * omega_1)
// scatters maximally.
struct ResonantDiscrimination {
    double r = 0.0;       // exact ratio; +inf when gamma_12 == 0
    bool finite = true;
    Flagged weak_probe_low;   // omega_2^2 G1 C^2 / (2 gamma G^2), omega_1 << G
    Flagged weak_probe_high;  // omega_2^2 G1 / (4 gamma omega_1^2), omega_1 >> G
};

ResonantDiscrimination ratio_resonant(const ValidatedConfig& cfg, double C);

// r = rho33(delta) / rho33(delta - Z), both from the exact closed form with
// the probe detuning held fixed (the pump detuning realizes the Raman
// detuning).
double ratio_two_lambda(const DiscriminationScenario& scenario, double delta);

// Large-detuning limit of the best ratio:
// (Z^2 + gamma^2) / ((2 alpha G Z^2 / omega_2^2 + gamma) gamma).
double r_infinity(const DiscriminationScenario& scenario);
// The ratio when the light shift is matched to Z; identical expression,
// kept under both names because both operating points matter.
double r_eit(const DiscriminationScenario& scenario);

// Recommended drive settings for a target separation Z at linewidth gamma.
struct OptimalSettings {
    double omega_2 = 0.0;       // as large as available
    double delta_2 = 0.0;       // pump detuning placing the peak on B
    double omega_1_bound = 0.0; // keep the probe below this
};
OptimalSettings optimal_settings(double Z, double gamma, double omega2_max,
                                 double gamma_total = 1.0);

// Degenerate manifolds distinguished only by coupling ratios C1 (probe) and
// C2 (pump).  B is taken at its own two-photon peak in the
// scattering-dominated regime.
struct DegenerateDiscrimination {
    double r = 0.0;           // closed-form ratio of the two manifolds
    double r_infinity = 0.0;  // large-detuning limit (C2 (C2-1) Dp)^2/g^2 + 1
    bool valid = true;
};
DegenerateDiscrimination ratio_degenerate(const ValidatedConfig& cfg,
                                          double C1, double C2);

// Which detuning stays fixed while the Raman detuning is searched.
enum class PeakAnchor { HoldDelta1, HoldDelta2 };

// Raman detuning of the two-photon peak, located by golden-section search
// around the dressed-state estimate.  The anchored detuning must be
// positive (blue).
double bright_peak_delta(const ValidatedConfig& base, PeakAnchor anchor);

// r evaluated with B at its numerically located peak.
struct TrackedRatio {
    double r = 0.0;
    double delta_star = 0.0;   // located peak position
    double rho_bright = 0.0;   // B-manifold rho33 at the peak
    double rho_dark = 0.0;     // D-manifold rho33 (at delta_star - Z)
};
TrackedRatio ratio_at_bright_peak(const ValidatedConfig& base, double Z,
                                  PeakAnchor anchor);

// r over a (delta_2, omega_2) grid with per-point peak tracking.  Points
// that fail to evaluate are recorded as NaN with valid = false.
SpectralScan scan_surface(const DiscriminationScenario& scenario,
                          const GridAxis& axis1, const GridAxis& axis2,
                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace eit
