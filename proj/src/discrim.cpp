#include "eit/discrim.hpp"

#include <cmath>
#include <limits>

#include "eit/errors.hpp"
#include "eit/numeric.hpp"

namespace eit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ValidatedConfig with_drive(const SystemConfig& cfg, double delta1,
                           double delta2) {
    SystemConfig c = cfg;
    c.drive.delta_1 = delta1;
    c.drive.delta_2 = delta2;
    return validate_config(c);
}

}  // namespace

double benchmark_single_photon_r(double Z, double laser_linewidth) {
    if (!(laser_linewidth > 0.0))
        throw PreconditionError("benchmark requires laser_linewidth > 0");
    const double x = 2.0 * Z / laser_linewidth;
    return x * x + 1.0;
}

ResonantDiscrimination ratio_resonant(const ValidatedConfig& cfg, double C) {
    const auto& d = cfg.drive();
    const auto& a = cfg.atom();
    if (d.delta_1 != 0.0 || d.delta_2 != 0.0)
        throw PreconditionError("resonant ratio requires zero detunings");
    if (!(C > 0.0)) throw PreconditionError("coupling C must be positive");

    const double G = a.gamma_total, G1 = a.gamma_1, G2 = a.gamma_2;
    const double W1s = d.omega_1 * d.omega_1, W2s = d.omega_2 * d.omega_2;
    const double Ws = W1s + W2s;
    const double Y = G2 * W1s + G1 * W2s;
    const double g = cfg.coherence().gamma_12;
    const double G13 = cfg.coherence().gamma_13;

    ResonantDiscrimination out;
    const double num = Ws * Y + 2.0 * g * (3.0 * W1s * W2s + 2.0 * G13 * Y);
    const double den = 2.0 * g * W2s * (2.0 * W1s + G * G / (C * C));
    if (den > 0.0) {
        out.r = num / den;
        out.finite = true;
    } else {
        out.r = kInf;  // dark state is exact at zero linewidth
        out.finite = false;
    }

    const double gs = g > 0.0 ? g : kNaN;
    const bool weak = W1s <= 1e-2 * std::min(W2s, G2 > 0.0 ? G1 * W2s / G2 : kInf);
    out.weak_probe_low =
        Flagged{W2s * G1 * C * C / (2.0 * gs * G * G),
                weak && W1s <= 1e-2 * G * G && g > 0.0};
    out.weak_probe_high =
        Flagged{W2s * G1 / (4.0 * gs * W1s),
                weak && W1s >= 1e2 * G * G && g > 0.0};
    return out;
}

double ratio_two_lambda(const DiscriminationScenario& scenario, double delta) {
    if (scenario.kind != ScenarioKind::TwoLambdaOffset)
        throw PreconditionError("ratio_two_lambda needs a two-manifold scenario");
    const double d1 = scenario.cfg.drive.delta_1;
    const double num =
        rho33_exact(with_drive(scenario.cfg, d1, d1 - delta));
    const double den =
        rho33_exact(with_drive(scenario.cfg, d1, d1 - (delta - scenario.Z)));
    if (den == 0.0) return kInf;
    return num / den;
}

double r_infinity(const DiscriminationScenario& scenario) {
    const ValidatedConfig cfg = validate_config(scenario.cfg);
    const double g = cfg.coherence().gamma_12;
    const double alpha = cfg.coherence().alpha;
    const double G = cfg.atom().gamma_total;
    const double W2s = cfg.drive().omega_2 * cfg.drive().omega_2;
    const double Z = scenario.Z;
    if (!(W2s > 0.0)) throw PreconditionError("r_infinity requires omega_2 > 0");
    if (!(g > 0.0)) return kInf;
    return (Z * Z + g * g) /
           ((2.0 * alpha * G * Z * Z / W2s + g) * g);
}

double r_eit(const DiscriminationScenario& scenario) {
    return r_infinity(scenario);
}

OptimalSettings optimal_settings(double Z, double gamma, double omega2_max,
                                 double gamma_total) {
    if (!(Z > 0.0)) throw PreconditionError("optimal settings require Z > 0");
    if (gamma < 0.0) throw PreconditionError("gamma negative");
    OptimalSettings s;
    s.omega_2 = omega2_max;
    const double W2s = omega2_max * omega2_max;
    s.delta_2 = W2s / (4.0 * Z) *
                    (1.0 + gamma * W2s / (2.0 * gamma_total * Z * Z)) -
                Z;
    s.omega_1_bound =
        0.1 * std::max(Z * gamma_total / omega2_max,
                       s.delta_2 * gamma / omega2_max);
    return s;
}

DegenerateDiscrimination ratio_degenerate(const ValidatedConfig& cfg,
                                          double C1, double C2) {
    if (!(C1 > 0.0) || !(C2 > 0.0))
        throw PreconditionError("coupling ratios must be positive");
    const DerivedRates r = derived_rates(cfg);
    const double Dp = r.light_shift, R = r.scatter_rate, We = r.omega_eff;
    const double g = cfg.coherence().gamma_12;
    const double alpha = cfg.coherence().alpha;
    const double G1 = cfg.atom().gamma_1;
    if (G1 <= 0.0)
        throw PreconditionError("degenerate ratio requires gamma_1 > 0");

    // B at its own peak, scattering-dominated; probe coupling C1 cancels
    // between the drive and the enhanced decay.
    const double C1s = C1 * C1, C2s = C2 * C2;
    const double rho_b = C1s * C2s * We * We / (2.0 * G1 * C1s) /
                         (alpha * C2s * R / 2.0 + g);
    // D seen at the offset between the two light-shifted peaks.
    const double split = (C2s - 1.0) * Dp;
    const double hw = alpha * R / 2.0 + g;
    const double rho_d = We * We * (alpha * R * C2s * C2s / 2.0 + g) /
                         (2.0 * G1) / (split * split + hw * hw);

    DegenerateDiscrimination out;
    out.r = rho_d > 0.0 ? rho_b / rho_d : kInf;
    const double t = C2 * (C2 - 1.0) * Dp;
    out.r_infinity = g > 0.0 ? t * t / (g * g) + 1.0 : kInf;
    out.valid = We * We <= 0.01 * R * R && g > 0.0 &&
                far_detuned_margins(cfg).ok();
    return out;
}

double bright_peak_delta(const ValidatedConfig& base, PeakAnchor anchor) {
    const auto& d = base.drive();
    const double anchored = anchor == PeakAnchor::HoldDelta1 ? d.delta_1
                                                             : d.delta_2;
    if (!(anchored > 0.0))
        throw PreconditionError("peak tracking requires a blue anchored detuning");
    const double W2 = d.omega_2;
    if (!(W2 > 0.0))
        throw PreconditionError("peak tracking requires omega_2 > 0");

    // Dressed-state estimate of the peak position; exact in both the
    // far-detuned (-> W2^2 / 4 delta) and resonant (-> W2 / 2) limits.
    const double est =
        0.5 * (std::sqrt(anchored * anchored + W2 * W2) - anchored);

    auto rho_at = [&](double delta) {
        if (anchor == PeakAnchor::HoldDelta1)
            return rho33_exact(with_drive(base.get(), d.delta_1,
                                          d.delta_1 - delta));
        return rho33_exact(with_drive(base.get(), d.delta_2 + delta,
                                      d.delta_2));
    };
    return golden_max(rho_at, 0.2 * est, 5.0 * est);
}

TrackedRatio ratio_at_bright_peak(const ValidatedConfig& base, double Z,
                                  PeakAnchor anchor) {
    TrackedRatio out;
    out.delta_star = bright_peak_delta(base, anchor);

    const auto& d = base.drive();
    // Anchor the probe at the peak; both manifolds then share delta_1.
    const double delta1 = anchor == PeakAnchor::HoldDelta1
                              ? d.delta_1
                              : d.delta_2 + out.delta_star;
    out.rho_bright =
        rho33_exact(with_drive(base.get(), delta1, delta1 - out.delta_star));
    out.rho_dark = rho33_exact(
        with_drive(base.get(), delta1, delta1 - (out.delta_star - Z)));
    out.r = out.rho_dark > 0.0 ? out.rho_bright / out.rho_dark : kInf;
    return out;
}

SpectralScan scan_surface(const DiscriminationScenario& scenario,
                          const GridAxis& axis1, const GridAxis& axis2,
                          ExecutionPolicy policy) {
    if (scenario.kind != ScenarioKind::TwoLambdaOffset)
        throw PreconditionError("scan_surface needs a two-manifold scenario");
    axis1.validate();
    axis2.validate();
    const bool a1_is_delta = axis1.name == "delta_2";
    const bool a1_is_omega = axis1.name == "omega_2";
    const bool a2_is_delta = axis2.name == "delta_2";
    const bool a2_is_omega = axis2.name == "omega_2";
    if (!((a1_is_delta && a2_is_omega) || (a1_is_omega && a2_is_delta)))
        throw ConfigError("scan axes must be delta_2 and omega_2");

    SpectralScan scan;
    scan.quantity = "r";
    scan.axis1 = axis1;
    scan.axis2 = axis2;
    scan.values.assign(scan.size(), kNaN);
    scan.valid.assign(scan.size(), false);
    scan.metadata = {
        {"scenario", "two-lambda-offset"},
        {"Z", format_double(scenario.Z)},
        {"omega_1", format_double(scenario.cfg.drive.omega_1)},
        {"gamma_12",
         format_double(validate_config(scenario.cfg).coherence().gamma_12)},
        {"tracking", "bright-peak"},
    };

    const auto v1 = axis1.values();
    const auto v2 = axis2.values();
    for_each_index(scan.size(), policy, [&](std::size_t k) {
        const int i = static_cast<int>(k) / axis2.n;
        const int j = static_cast<int>(k) % axis2.n;
        const double delta2 = a1_is_delta ? v1[i] : v2[j];
        const double omega2 = a1_is_delta ? v2[j] : v1[i];
        try {
            SystemConfig c = scenario.cfg;
            c.drive.omega_2 = omega2;
            c.drive.delta_2 = delta2;
            c.drive.delta_1 = delta2;  // placeholder; tracking sets delta
            const TrackedRatio t = ratio_at_bright_peak(
                validate_config(c), scenario.Z, PeakAnchor::HoldDelta2);
            if (std::isfinite(t.r)) {
                scan.values[k] = t.r;
                scan.valid[k] = true;
            }
        } catch (const Error&) {
            // recorded as missing
        }
    });
    return scan;
}

}  // namespace eit
