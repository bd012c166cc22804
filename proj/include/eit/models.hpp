#pragma once

#include "eit/analytic.hpp"
#include "eit/params.hpp"

namespace eit {

// The two-photon peak is governed by the competition between pump photon
// scattering (rate R) and Raman flopping (rate omega_eff).  Scattering acts
// as a measurement and freezes the flopping when it dominates.
enum class Regime { Zeno, PowerBroadened, Crossover };

struct RegimeReport {
    Regime regime = Regime::Crossover;
    double rho33_max = 0.0;  // predicted peak height
    double fwhm = 0.0;       // predicted peak width
};

// Scattering-interrupted Rabi flopping estimate of the peak profile, as a
// function of the detuning from the two-photon peak.  Uses the pump
// scattering rate R2 = omega_2^2 Gamma / (4 delta_2^2).  Valid for
// omega_2 >> omega_1 and delta_2 >> Gamma, omega_2; intended for
// gamma_1 >> gamma_2 (excited population returns to level 1).
Flagged zeno_rho33(const ValidatedConfig& cfg, double delta_prime_detuning);

// Effective decay rate between the dark and coupled ground-state
// superpositions induced by laser phase noise:
// 2 gamma omega_1^2 omega_2^2 / (omega_1^2 + omega_2^2)^2.
double gamma_tilde(const ValidatedConfig& cfg);

// Dark-point population from the three-state rate-equation model in the
// {upper, dark, coupled} basis: R Gt / (R G1 + 2 (R + G) Gt).
Flagged rate_model_dark(const ValidatedConfig& cfg);

// Its weak-decoherence simplification
// 2 omega_1^2 gamma / G1 / (omega_2^2 + (omega_eff^2/R^2)(4 G^2/G1) gamma).
Flagged rate_model_dark_simplified(const ValidatedConfig& cfg);

// Classifies the peak regime (R vs omega_eff, factor 10 both ways) and
// returns the corresponding peak height / width predictions.
RegimeReport classify_regime(const ValidatedConfig& cfg);

}  // namespace eit
