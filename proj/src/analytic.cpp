#include "eit/analytic.hpp"

#include <cmath>
#include <limits>

#include "eit/errors.hpp"

namespace eit {

namespace {

// Common parameter bundle unpacked from a config.
struct P {
    double G, G1, G2;        // decay rates
    double W1, W2;           // Rabi frequencies
    double D1, D2;           // detunings
    double G13, G23, g;      // coherence decay rates
    double alpha;
    double delta;            // D1 - D2
};

P unpack(const ValidatedConfig& cfg) {
    const auto& a = cfg.atom();
    const auto& d = cfg.drive();
    const auto& c = cfg.coherence();
    return P{a.gamma_total, a.gamma_1, a.gamma_2, d.omega_1, d.omega_2,
             d.delta_1,     d.delta_2, c.gamma_13, c.gamma_23, c.gamma_12,
             c.alpha,       d.delta_1 - d.delta_2};
}

void require_equal_upper_coherences(const ValidatedConfig& cfg) {
    if (!cfg.analytic_ok())
        throw PreconditionError(
            "closed form requires gamma_13 == gamma_23; use the numerical "
            "steady state for unequal rates");
}

void require_far_detuned_usable(const P& p) {
    if (p.G1 <= 0.0)
        throw PreconditionError("far-detuned forms require gamma_1 > 0");
    if (p.D1 == 0.0)
        throw PreconditionError("far-detuned forms require delta_1 != 0");
    if (p.W2 <= 0.0)
        throw PreconditionError("far-detuned forms require omega_2 > 0");
}

}  // namespace

DerivedRates derived_rates(const ValidatedConfig& cfg) {
    const P p = unpack(cfg);
    if (p.D1 == 0.0)
        throw PreconditionError("derived rates require delta_1 != 0");
    DerivedRates r;
    r.delta = p.delta;
    r.light_shift = p.W2 * p.W2 / (4.0 * p.D1);
    r.scatter_rate = p.W2 * p.W2 / (4.0 * p.D1 * p.D1) * p.G;
    r.omega_eff = p.W2 * p.W1 / (2.0 * p.D1);
    r.Y = p.G2 * p.W1 * p.W1 + p.G1 * p.W2 * p.W2;
    r.omega_sq = p.W1 * p.W1 + p.W2 * p.W2;
    return r;
}

FarDetunedMargins far_detuned_margins(const ValidatedConfig& cfg) {
    const P p = unpack(cfg);
    const double W1sq = p.W1 * p.W1;
    const double cap1 = p.G2 > 0.0 ? p.G1 * p.W2 * p.W2 / p.G2
                                   : std::numeric_limits<double>::infinity();
    const double cap = std::min(cap1, p.G1 * p.alpha * p.G);
    FarDetunedMargins m;
    m.weak_probe = W1sq > 0.0 ? cap / W1sq
                              : std::numeric_limits<double>::infinity();
    const double floor =
        std::max(p.alpha * p.alpha * p.G * p.G, p.delta * p.delta);
    m.detuning = floor > 0.0 ? p.D1 * p.D1 / floor
                             : std::numeric_limits<double>::infinity();
    return m;
}

DenominatorCoefficients denominator_coefficients(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    if (p.G13 <= 0.0 && p.g > 0.0)
        throw PreconditionError(
            "denominator requires gamma_13 > 0 at finite gamma_12");

    const double W1s = p.W1 * p.W1, W2s = p.W2 * p.W2;
    const double Ws = W1s + W2s;
    const double Y = p.G2 * W1s + p.G1 * W2s;
    const double d = p.delta;
    const double Gb = p.G1 + p.G2;  // branching total

    DenominatorCoefficients c;
    c.c0 = Ws * Ws * Y + 16.0 * d * d * p.G13 * p.G13 * Y +
           4.0 * d * d * W1s * W2s * (6.0 * p.G13 - Gb) +
           16.0 * d * d * (p.G2 * W1s * p.D2 * p.D2 + p.G1 * W2s * p.D1 * p.D1) -
           8.0 * d * (p.D1 * p.G1 * W2s * W2s - p.D2 * p.G2 * W1s * W1s);

    // Same polynomial grouped into a sum of non-negative terms; the first
    // two are the squared distances to the pump- and probe-shifted
    // two-photon resonances.
    const double t1 = p.D1 * d - W2s / 4.0;
    const double t2 = p.D2 * d + W1s / 4.0;
    c.c0_factorized = 16.0 * W2s * p.G1 * t1 * t1 + 16.0 * W1s * p.G2 * t2 * t2 +
                      16.0 * d * d * p.G13 * p.G13 * Y +
                      4.0 * d * d * W1s * W2s * (6.0 * p.G13 - Gb) +
                      W1s * W2s * (Y + Ws * Gb);

    const double cross = p.G1 * p.D1 * p.D1 + p.G2 * p.D2 * p.D2 +
                         Gb * p.D1 * p.D2;
    c.c1 = 2.0 * Ws * (4.0 * p.G13 * Y + 3.0 * W1s * W2s);
    if (p.G13 > 0.0) c.c1 += 4.0 * W1s * W2s / p.G13 * cross;

    c.c2 = 8.0 * (2.0 * p.G13 * p.G13 * Y + 3.0 * p.G13 * W1s * W2s +
                  2.0 * (p.D2 * p.D2 * p.G2 * W1s + p.D1 * p.D1 * p.G1 * W2s));
    return c;
}

double rho33_exact(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    const DenominatorCoefficients c = denominator_coefficients(cfg);
    const double den = c.c0_factorized + c.c1 * p.g + c.c2 * p.g * p.g;
    if (!(den > 0.0))
        throw PreconditionError("vanishing denominator: no drive and no decay");

    const double W1s = p.W1 * p.W1, W2s = p.W2 * p.W2;
    const double num =
        2.0 * W1s * W2s *
        (2.0 * p.alpha * p.G * (p.delta * p.delta + p.g * p.g) +
         (W1s + W2s) * p.g);
    return num / den;
}

double rho33_resonant(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    if (p.D1 != 0.0 || p.D2 != 0.0)
        throw PreconditionError("resonant form requires delta_1 = delta_2 = 0");

    const double W1s = p.W1 * p.W1, W2s = p.W2 * p.W2;
    const double Ws = W1s + W2s;
    const double Y = p.G2 * W1s + p.G1 * W2s;
    const double den =
        Ws * Y + 2.0 * p.g * (3.0 * W1s * W2s + 2.0 * p.G13 * Y);
    if (!(den > 0.0))
        throw PreconditionError("vanishing denominator: no drive and no decay");
    return 2.0 * p.g * W1s * W2s / den;
}

double rho33_ladder(const ValidatedConfig& cfg) {
    if (cfg.topology() != Topology::Ladder)
        throw PreconditionError("ladder form requires ladder topology");
    const P p = unpack(cfg);
    if (p.D1 != 0.0 || p.D2 != 0.0)
        throw PreconditionError("ladder form requires delta_1 = delta_2 = 0");

    const double W1s = p.W1 * p.W1, W2s = p.W2 * p.W2;
    const double Ws = W1s + W2s;
    const double Yt = 2.0 * p.G2 * W1s + p.G1 * W2s + 2.0 * p.G1 * p.G2 * p.G23;
    const double dG = p.G23 - p.G13;
    const double num = 2.0 * p.g * W1s * W2s +
                       W1s * p.G2 * (W1s + 4.0 * p.G23 * p.g);
    const double den =
        Ws * Yt - p.G2 * W1s * (3.0 * W2s + 2.0 * p.G1 * dG) +
        2.0 * p.g * (3.0 * W1s * W2s + 2.0 * p.G13 * Yt + 4.0 * p.G2 * dG * W1s);
    if (!(den > 0.0))
        throw PreconditionError("vanishing denominator: no drive and no decay");
    return num / den;
}

double two_level_population(double omega, double gamma_total, double coupling,
                            double detuning) {
    const double cw = coupling * omega;
    if (cw <= 0.0) return 0.0;
    const double cws = cw * cw;
    return (cws / 4.0) / (detuning * detuning +
                          gamma_total * gamma_total / 4.0 + cws / 2.0);
}

Flagged rho33_far_detuned(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double Dp = r.light_shift, R = r.scatter_rate, We = r.omega_eff;
    const double Wes = We * We, d = p.delta, g = p.g;
    const double ratio21 = p.G2 / p.G1;

    const double num =
        Wes * (p.alpha * ((d * d + g * g) / (2.0 * Dp * Dp)) * R + g) /
        (2.0 * p.G1);
    const double dd = d - Dp;
    const double chirp = d * p.G / (2.0 * p.D1);
    double den = dd * dd +
                 chirp * chirp * (p.alpha * p.alpha + ratio21 * Wes / (R * R)) +
                 Wes / 4.0 * (ratio21 + 2.0) + g * g;
    den += (p.alpha + (Wes / (R * R)) * p.G / (p.alpha * p.G1)) * R * g;

    return Flagged{num / den, far_detuned_margins(cfg).ok()};
}

Flagged rho33_far_detuned_peak_form(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double Dp = r.light_shift, R = r.scatter_rate, We = r.omega_eff;
    const double Wes = We * We, d = p.delta, g = p.g;

    const double num =
        Wes * (p.alpha * ((d * d + g * g) / (2.0 * Dp * Dp)) * R + g) /
        (2.0 * p.G1);
    const double dd = d - Dp;
    const double hw = p.alpha * R / 2.0 + g;
    const double power =
        Wes * (p.G / (2.0 * p.G1)) * (1.0 + 2.0 * g / (p.alpha * R));
    return Flagged{num / (dd * dd + hw * hw + power),
                   far_detuned_margins(cfg).ok()};
}

double rho33_rate_equation_wing(const ValidatedConfig& cfg) {
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    return p.W1 * p.W1 * p.G / p.G1 / (4.0 * p.D1 * p.D1);
}

Flagged fano_profile(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    if (p.g != 0.0)
        throw PreconditionError("zero-linewidth profile requires gamma_12 = 0");
    const DerivedRates r = derived_rates(cfg);
    const double Dp = r.light_shift, R = r.scatter_rate, We = r.omega_eff;
    const double ratio = p.delta / Dp;
    const double num = We * We * ratio * ratio * R / (4.0 * p.G1);
    const double dd = p.delta - Dp;
    const double den =
        dd * dd + R * R / 4.0 + We * We * p.G / (2.0 * p.G1);
    return Flagged{num / den, far_detuned_margins(cfg).ok()};
}

double fano_fwhm(const ValidatedConfig& cfg) {
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    return std::sqrt(r.scatter_rate * r.scatter_rate +
                     r.omega_eff * r.omega_eff * 2.0 * p.G / p.G1);
}

std::pair<double, double> fano_half_max_points(const ValidatedConfig& cfg) {
    const DerivedRates r = derived_rates(cfg);
    const double f = fano_fwhm(cfg);
    const double Dp = r.light_shift;
    return {Dp + 0.5 * f * (f / Dp - 1.0), Dp + 0.5 * f * (f / Dp + 1.0)};
}

Flagged rho33_dressed(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate, We = r.omega_eff;
    const double dd = p.delta - r.light_shift;
    const double num = We * We * R / (4.0 * p.G1);
    const double den =
        dd * dd + R * R / 4.0 + We * We * p.G / (2.0 * p.G1);
    return Flagged{num / den, far_detuned_margins(cfg).ok()};
}

namespace {

bool dark_bright_valid(const P& p, const FarDetunedMargins& m) {
    // The extra condition beyond the far-detuned margins: the linewidth must
    // not exceed the pump saturation scale.
    return m.ok() && p.g * p.G <= 0.1 * p.W2 * p.W2;
}

}  // namespace

Flagged rho33_dark(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double Dp = r.light_shift, We = r.omega_eff;
    const double num = We * We * p.g / (2.0 * p.G1);
    const double den = Dp * Dp + p.W1 * p.W1 * p.g / (p.alpha * p.G1) +
                       p.g * p.g;
    return Flagged{num / den, dark_bright_valid(p, far_detuned_margins(cfg))};
}

Flagged rho33_dark_alt(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate, We = r.omega_eff;
    const double ratio = We * We / (R * R);
    const double num = 2.0 * p.W1 * p.W1 * p.g / p.G1;
    const double den = p.W2 * p.W2 +
                       ratio * (4.0 * p.G * p.G / (p.alpha * p.G1)) * p.g +
                       (4.0 * p.G / R) * p.g * p.g;
    return Flagged{num / den, dark_bright_valid(p, far_detuned_margins(cfg))};
}

Flagged rho33_bright(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate, We = r.omega_eff;
    const double hw = p.alpha * R / 2.0 + p.g;
    const double num = (We * We / (2.0 * p.G1)) * hw;
    const double den = hw * hw +
                       0.5 * We * We * (p.G / p.G1) *
                           (1.0 + 2.0 * p.g / (p.alpha * R));
    return Flagged{num / den, dark_bright_valid(p, far_detuned_margins(cfg))};
}

Flagged rho33_bright_zeno(const ValidatedConfig& cfg) {
    require_equal_upper_coherences(cfg);
    const P p = unpack(cfg);
    require_far_detuned_usable(p);
    const DerivedRates r = derived_rates(cfg);
    const double R = r.scatter_rate, We = r.omega_eff;
    const double value =
        (We * We / (2.0 * p.G1)) / (p.alpha * R / 2.0 + p.g);
    const bool zeno = We * We <= 0.01 * R * R;
    return Flagged{value, zeno && dark_bright_valid(p, far_detuned_margins(cfg))};
}

double absorption_minimum_offset(const ValidatedConfig& cfg) {
    const P p = unpack(cfg);
    return 2.0 * p.g * p.D1 / (p.alpha * p.G + 4.0 * p.g);
}

}  // namespace eit
