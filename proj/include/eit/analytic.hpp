#pragma once

#include <utility>

#include "eit/params.hpp"

namespace eit {

// Result of an approximate formula together with a flag saying whether the
// formula's stated validity conditions hold (with factor-of-10 margins).
// Values are always computed; the caller decides what to do with invalid
// ones, which allows plotting beyond the strict validity region.
struct Flagged {
    double value = 0.0;
    bool valid = true;
};

// Quantities derived from the drive parameters that organize the
// far-detuned behaviour.
struct DerivedRates {
    double delta = 0.0;        // two-photon detuning delta_1 - delta_2
    double light_shift = 0.0;  // Delta' = omega_2^2 / (4 delta_1)
    double scatter_rate = 0.0; // R = (omega_2^2 / 4 delta_1^2) * Gamma
    double omega_eff = 0.0;    // omega_1 omega_2 / (2 delta_1)
    double Y = 0.0;            // Gamma_2 omega_1^2 + Gamma_1 omega_2^2
    double omega_sq = 0.0;     // omega_1^2 + omega_2^2
};

// Denominator of the closed-form steady state, organized as
// c0 + c1*gamma + c2*gamma^2.  c0_factorized groups c0 into a sum of
// non-negative resonance terms; the two forms are algebraically identical
// and the factorized one is what rho33_exact evaluates (no cancellation).
struct DenominatorCoefficients {
    double c0 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c0_factorized = 0.0;
};

// Margin factors for the weak-probe / far-detuned conditions.  Both are
// >= 10 when the conditions hold with the standard factor-of-10 margin.
struct FarDetunedMargins {
    double weak_probe = 0.0;  // min(G1 W2^2 / G2, G1 alpha G) / W1^2
    double detuning = 0.0;    // D1^2 / max(alpha^2 G^2, delta^2)
    bool ok(double factor = 10.0) const {
        return weak_probe >= factor && detuning >= factor;
    }
};

DerivedRates derived_rates(const ValidatedConfig& cfg);  // needs delta_1 != 0
FarDetunedMargins far_detuned_margins(const ValidatedConfig& cfg);

// Requires gamma_13 == gamma_23 (throws PreconditionError otherwise) and
// gamma_13 > 0 when gamma_12 > 0.
DenominatorCoefficients denominator_coefficients(const ValidatedConfig& cfg);

// Exact steady-state upper-level population of the Lambda system, valid for
// equal upper-coherence decay rates.  Agrees with the numerical steady
// state to solver precision.
double rho33_exact(const ValidatedConfig& cfg);

// Exact reduction of rho33_exact at delta_1 = delta_2 = 0 (throws if the
// detunings are nonzero).
double rho33_resonant(const ValidatedConfig& cfg);

// Zero-detuning steady state for the ladder scheme (level 2 above 3,
// decaying 2 -> 3).  Uses gamma_13 and gamma_23 independently.
double rho33_ladder(const ValidatedConfig& cfg);

// Saturation formula for a resonantly driven two-level transition of Rabi
// frequency coupling*omega and total width gamma_total, optionally detuned.
double two_level_population(double omega, double gamma_total, double coupling,
                            double detuning = 0.0);

// Weak-probe far-detuned approximation of rho33 (full form, no further
// simplification of the line shape).
Flagged rho33_far_detuned(const ValidatedConfig& cfg);

// Same with delta^2 replaced by light_shift^2 in the denominator, which
// turns the denominator into a single Lorentzian in (delta - Delta').
// Keeps finite laser linewidth.
Flagged rho33_far_detuned_peak_form(const ValidatedConfig& cfg);

// Rate-equation wing value W1^2 G / (4 G1 D1^2): single-photon scattering
// off the weak transition with the pump acting as repumper.
double rho33_rate_equation_wing(const ValidatedConfig& cfg);

// Zero-linewidth asymmetric profile with an exact zero at delta = 0 next to
// the two-photon peak at delta = Delta'.  Requires gamma_12 = 0.
Flagged fano_profile(const ValidatedConfig& cfg);

// Width of the two-photon peak: f = sqrt(R^2 + omega_eff^2 * 2 G / G1).
double fano_fwhm(const ValidatedConfig& cfg);

// Half-maximum detunings {lower, upper} of the peak, from the width formula
// under f << Delta'.
std::pair<double, double> fano_half_max_points(const ValidatedConfig& cfg);

// Symmetric (Lorentzian) part of the peak: the profile with the asymmetric
// numerator factor dropped, i.e. a driven two-level dressed transition of
// width R/2 and coupling omega_eff.
Flagged rho33_dressed(const ValidatedConfig& cfg);

// Population at the two-photon dark point (delta = 0), finite linewidth.
Flagged rho33_dark(const ValidatedConfig& cfg);
// Equivalent rewriting of rho33_dark in terms of R and omega_eff.
Flagged rho33_dark_alt(const ValidatedConfig& cfg);

// Population at the two-photon bright peak (delta = Delta').
Flagged rho33_bright(const ValidatedConfig& cfg);
// Its limit when scattering dominates Raman flopping (omega_eff^2 <= R^2/100).
Flagged rho33_bright_zeno(const ValidatedConfig& cfg);

// Magnitude of the displacement of the absorption minimum from delta = 0 at
// finite linewidth: 2 gamma delta_1 / (alpha Gamma + 4 gamma).  The minimum
// sits on the side of delta = 0 away from the bright peak.
double absorption_minimum_offset(const ValidatedConfig& cfg);

}  // namespace eit
