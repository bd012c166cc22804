#include "eit/models.hpp"

#include <cmath>

#include "eit/errors.hpp"

namespace eit {

Flagged zeno_rho33(const ValidatedConfig& cfg, double delta_prime_detuning) {
    const auto& d = cfg.drive();
    const double G = cfg.atom().gamma_total;
    if (d.delta_2 == 0.0)
        throw PreconditionError("flopping model requires delta_2 != 0");
    if (d.delta_1 == 0.0)
        throw PreconditionError("flopping model requires delta_1 != 0");

    const double R2 = d.omega_2 * d.omega_2 * G / (4.0 * d.delta_2 * d.delta_2);
    const double We = d.omega_2 * d.omega_1 / (2.0 * d.delta_1);
    const double dp = delta_prime_detuning;
    const double value = We * We * R2 / (2.0 * G) /
                         (dp * dp + R2 * R2 + We * We);

    const bool valid = d.omega_2 >= 10.0 * d.omega_1 &&
                       std::abs(d.delta_2) >= 5.0 * std::max(G, d.omega_2);
    return Flagged{value, valid};
}

double gamma_tilde(const ValidatedConfig& cfg) {
    const auto& d = cfg.drive();
    const double g = cfg.coherence().gamma_12;
    const double W1s = d.omega_1 * d.omega_1, W2s = d.omega_2 * d.omega_2;
    const double Ws = W1s + W2s;
    if (Ws == 0.0) return 0.0;
    return 2.0 * g * W1s * W2s / (Ws * Ws);
}

Flagged rate_model_dark(const ValidatedConfig& cfg) {
    const double G = cfg.atom().gamma_total;
    const double G1 = cfg.atom().gamma_1;
    if (G1 <= 0.0)
        throw PreconditionError("rate model requires gamma_1 > 0");
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate;
    const double Gt = gamma_tilde(cfg);
    const double den = R * G1 + 2.0 * (R + G) * Gt;
    const double value = den > 0.0 ? R * Gt / den : 0.0;
    const bool valid =
        far_detuned_margins(cfg).weak_probe >= 10.0 && Gt <= 0.1 * G1;
    return Flagged{value, valid};
}

Flagged rate_model_dark_simplified(const ValidatedConfig& cfg) {
    const auto& d = cfg.drive();
    const double G = cfg.atom().gamma_total;
    const double G1 = cfg.atom().gamma_1;
    const double g = cfg.coherence().gamma_12;
    if (G1 <= 0.0)
        throw PreconditionError("rate model requires gamma_1 > 0");
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate, We = r.omega_eff;
    if (R <= 0.0)
        throw PreconditionError("rate model requires omega_2 > 0");
    const double den = d.omega_2 * d.omega_2 +
                       (We * We / (R * R)) * (4.0 * G * G / G1) * g;
    const bool valid = far_detuned_margins(cfg).weak_probe >= 10.0 &&
                       gamma_tilde(cfg) <= 0.1 * G1;
    return Flagged{2.0 * d.omega_1 * d.omega_1 * g / G1 / den, valid};
}

RegimeReport classify_regime(const ValidatedConfig& cfg) {
    const double G = cfg.atom().gamma_total;
    const double G1 = cfg.atom().gamma_1;
    if (G1 <= 0.0)
        throw PreconditionError("regime predictions require gamma_1 > 0");
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate, We = std::abs(r.omega_eff);
    const double W1 = cfg.drive().omega_1;

    RegimeReport out;
    if (R >= 10.0 * We) {
        out.regime = Regime::Zeno;
        out.rho33_max = W1 * W1 / (G1 * G);
        out.fwhm = R;
    } else if (We >= 10.0 * R) {
        out.regime = Regime::PowerBroadened;
        out.rho33_max = R / (2.0 * G);
        out.fwhm = std::sqrt(2.0 * G / G1) * We;
    } else {
        out.regime = Regime::Crossover;
        out.rho33_max = (We * We * R / (4.0 * G1)) /
                        (R * R / 4.0 + We * We * G / (2.0 * G1));
        out.fwhm = fano_fwhm(cfg);
    }
    return out;
}

}  // namespace eit
