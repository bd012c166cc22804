#include "eit/validate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "eit/analytic.hpp"
#include "eit/cooling.hpp"
#include "eit/discrim.hpp"
#include "eit/figures.hpp"
#include "eit/models.hpp"
#include "eit/numeric.hpp"
#include "eit/obe.hpp"

namespace eit {

namespace {

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

double loguni(ValidationRng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

double uni(ValidationRng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    return u(rng);
}

// Deviation in units of the allowance; <= 1 passes.
double allowance_ratio(double value, double reference, double rel,
                       double abs_floor) {
    return std::abs(value - reference) /
           std::max(abs_floor, rel * std::abs(reference));
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(3);
    ss << v;
    return ss.str();
}

std::vector<double> median3(const std::vector<double>& v) {
    if (v.size() < 3) return v;
    std::vector<double> out(v.size());
    out.front() = v.front();
    out.back() = v.back();
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        double a = v[i - 1], b = v[i], c = v[i + 1];
        out[i] = std::max(std::min(a, b), std::min(std::max(a, b), c));
    }
    return out;
}

}  // namespace

ValidatedConfig random_equivalence_config(ValidationRng& rng) {
    const double w1 = loguni(rng, 1e-2, 10.0);
    const double w2 = loguni(rng, 1e-2, 10.0);
    const double d1 = uni(rng, -10.0, 10.0);
    const double d2 = uni(rng, -10.0, 10.0);
    const double g = uni(rng, 0.0, 1.0);
    const double u = uni(rng, 0.0, 1.0);
    return make_lambda_config(w1, w2, d1, d2, g, u, 1.0 - u);
}

ValidatedConfig random_relaxing_config(ValidationRng& rng) {
    // Moderate drives and detunings keep every relaxation rate well above
    // 1/200, so integration to t = 200 settles to the steady state.
    const double w1 = loguni(rng, 0.5, 2.0);
    const double w2 = loguni(rng, 0.5, 2.0);
    const double d1 = uni(rng, -1.0, 1.0);
    const double d2 = uni(rng, -1.0, 1.0);
    const double g = uni(rng, 0.05, 0.5);
    const double u = uni(rng, 0.2, 0.8);
    return make_lambda_config(w1, w2, d1, d2, g, u, 1.0 - u);
}

CheckResult check_equivalence(int n, ExecutionPolicy policy,
                              std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    std::vector<ValidatedConfig> cfgs;
    cfgs.reserve(n);
    for (int i = 0; i < n; ++i) cfgs.push_back(random_equivalence_config(rng));

    std::vector<double> ratio(n, 0.0);
    for_each_index(static_cast<std::size_t>(n), policy, [&](std::size_t i) {
        const double analytic = rho33_exact(cfgs[i]);
        const double numeric =
            excited_population(steady_state(build_liouvillian(cfgs[i])));
        ratio[i] = allowance_ratio(analytic, numeric, 1e-9, 1e-15);
    });
    const double worst = *std::max_element(ratio.begin(), ratio.end());
    const double secs = timer.seconds();

    CheckResult r;
    r.name = "1 exact-formula equivalence";
    r.pass = worst <= 1.0 && secs < 30.0;
    r.detail = std::to_string(n) + " configs, worst deviation " + fmt(worst) +
               "x allowance (rel 1e-9, abs 1e-15), " + fmt(secs) + " s";
    r.seconds = secs;
    return r;
}

CheckResult check_evolve_consistency(int n, ExecutionPolicy policy,
                                     std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    std::vector<ValidatedConfig> cfgs;
    cfgs.reserve(n);
    for (int i = 0; i < n; ++i) cfgs.push_back(random_relaxing_config(rng));

    std::vector<double> worst(n, 0.0);
    for_each_index(static_cast<std::size_t>(n), policy, [&](std::size_t i) {
        const Liouvillian L = build_liouvillian(cfgs[i]);
        const DensityMatrix3 target = steady_state(L);
        const DensityMatrix3 starts[3] = {DensityMatrix3::ground_state(1),
                                          DensityMatrix3::ground_state(2),
                                          DensityMatrix3::maximally_mixed()};
        double w = 0.0;
        for (const auto& s : starts) {
            const DensityMatrix3 evolved =
                evolve(L, s, 200.0 / cfgs[i].atom().gamma_total);
            w = std::max(
                w, (evolved.matrix() - target.matrix()).cwiseAbs().maxCoeff());
        }
        worst[i] = w;
    });
    const double w = *std::max_element(worst.begin(), worst.end());

    CheckResult r;
    r.name = "2 time-integration consistency";
    r.pass = w <= 1e-8;
    r.detail = std::to_string(n) +
               " configs x 3 initial states, t = 200, worst elementwise gap " +
               fmt(w) + " (limit 1e-8)";
    r.seconds = timer.seconds();
    return r;
}

CheckResult check_dark_exactness(int n, std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    double worst_analytic = 0.0, worst_numeric = 0.0;
    for (int i = 0; i < n; ++i) {
        const double w1 = loguni(rng, 1e-2, 10.0);
        const double w2 = loguni(rng, 1e-2, 10.0);
        const double d = uni(rng, -10.0, 10.0);
        const double u = uni(rng, 0.0, 1.0);
        const ValidatedConfig cfg =
            make_lambda_config(w1, w2, d, d, 0.0, u, 1.0 - u);
        worst_analytic = std::max(worst_analytic, std::abs(rho33_exact(cfg)));
        worst_numeric = std::max(
            worst_numeric,
            std::abs(excited_population(steady_state(build_liouvillian(cfg)))));
    }
    CheckResult r;
    r.name = "3 dark-resonance exactness";
    r.pass = worst_analytic <= 1e-12 && worst_numeric <= 1e-10;
    r.detail = "analytic " + fmt(worst_analytic) + " (limit 1e-12), numeric " +
               fmt(worst_numeric) + " (limit 1e-10), " + std::to_string(n) +
               " configs";
    r.seconds = timer.seconds();
    return r;
}

CheckResult check_resonant_reduction(int n_resonant, int n_ladder,
                                     std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    double worst_res = 0.0;
    for (int i = 0; i < n_resonant; ++i) {
        const double w1 = loguni(rng, 1e-2, 10.0);
        const double w2 = loguni(rng, 1e-2, 10.0);
        const double g = uni(rng, 0.0, 1.0);
        const double u = uni(rng, 0.0, 1.0);
        const ValidatedConfig cfg =
            make_lambda_config(w1, w2, 0.0, 0.0, g, u, 1.0 - u);
        worst_res = std::max(worst_res,
                             allowance_ratio(rho33_resonant(cfg),
                                             rho33_exact(cfg), 1e-12, 1e-300));
    }
    double worst_lad = 0.0;
    for (int i = 0; i < n_ladder; ++i) {
        const double w1 = loguni(rng, 1e-2, 10.0);
        const double w2 = loguni(rng, 1e-2, 10.0);
        const double g2 = loguni(rng, 0.05, 2.0);
        const double gl = uni(rng, 0.0, 0.5);
        const ValidatedConfig cfg =
            make_ladder_config(w1, w2, 0.0, 0.0, g2, gl);
        const double numeric =
            excited_population(steady_state(build_liouvillian(cfg)));
        worst_lad = std::max(
            worst_lad, allowance_ratio(rho33_ladder(cfg), numeric, 1e-9, 1e-15));
    }
    CheckResult r;
    r.name = "4 resonant reduction";
    r.pass = worst_res <= 1.0 && worst_lad <= 1.0;
    r.detail = "resonant worst " + fmt(worst_res) +
               "x allowance (rel 1e-12); ladder worst " + fmt(worst_lad) +
               "x allowance (rel 1e-9)";
    r.seconds = timer.seconds();
    return r;
}

namespace {

struct HierarchyDraw {
    ValidatedConfig cfg;
    double light_shift;
};

// A config holding the weak-probe and large-detuning conditions with
// factor-100 margins.
HierarchyDraw draw_hierarchy_config(ValidationRng& rng, double linewidth,
                                    double delta) {
    const double u = uni(rng, 0.2, 0.8);
    const double g1 = u, g2 = 1.0 - u;
    const double w2 = loguni(rng, 0.5, 4.0);
    const double alpha = 1.0 + linewidth;
    const double d1 = loguni(rng, std::max(20.0, 10.0 * alpha), 500.0);
    const double cap = std::min(g1 * w2 * w2 / g2, g1 * alpha);
    const double w1 = std::sqrt(0.01 * cap) * uni(rng, 0.2, 1.0);
    const double dp = w2 * w2 / (4.0 * d1);
    const double d = delta * dp;
    return HierarchyDraw{
        make_lambda_config(w1, w2, d1, d1 - d, linewidth, g1, g2), dp};
}

}  // namespace

CheckResult check_approximation_hierarchy(int n, int n_fwhm,
                                          std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    double worst_full = 0.0, worst_fano = 0.0, worst_fwhm = 0.0;
    int used_full = 0, used_fano = 0, used_fwhm = 0;

    // Finite-linewidth comparison against the exact form across the
    // two-photon feature and into the wings.
    for (int i = 0; i < n; ++i) {
        const double gl = loguni(rng, 1e-5, 1e-2);
        const double x = (i % 2 == 0) ? loguni(rng, 0.2, 3.0) *
                                            (uni(rng, 0.0, 1.0) < 0.5 ? -1 : 1)
                                      : uni(rng, -30.0, 30.0);
        const HierarchyDraw h = draw_hierarchy_config(rng, gl, x);
        if (std::abs(x * h.light_shift) >
            0.1 * h.cfg.drive().delta_1)  // keep |delta| <= delta_1/10
            continue;
        if (!far_detuned_margins(h.cfg).ok(100.0)) continue;
        const double exact = rho33_exact(h.cfg);
        const double approx = rho33_far_detuned(h.cfg).value;
        worst_full = std::max(worst_full, std::abs(approx - exact) / exact);
        ++used_full;
    }

    // Zero-linewidth profile near the peak, |delta - Delta'| <= 3 f.
    for (int i = 0; i < n; ++i) {
        HierarchyDraw h = draw_hierarchy_config(rng, 0.0, 1.0);
        const double f = fano_fwhm(h.cfg);
        if (f > h.light_shift / 10.0) continue;
        const double delta = h.light_shift + f * uni(rng, -3.0, 3.0);
        SystemConfig c = h.cfg.get();
        c.drive.delta_2 = c.drive.delta_1 - delta;
        const ValidatedConfig cfg = validate_config(c);
        if (!far_detuned_margins(cfg).ok(100.0)) continue;
        const double exact = rho33_exact(cfg);
        const double approx = fano_profile(cfg).value;
        if (exact <= 0.0) continue;
        worst_fano = std::max(worst_fano, std::abs(approx - exact) / exact);
        ++used_fano;
    }

    // Peak width against the numerically measured one.
    for (int i = 0; i < n_fwhm && used_fwhm < n_fwhm; ++i) {
        const HierarchyDraw h = draw_hierarchy_config(rng, 0.0, 1.0);
        const double f = fano_fwhm(h.cfg);
        if (f > h.light_shift / 10.0) continue;
        auto profile = [&](double delta) {
            SystemConfig c = h.cfg.get();
            c.drive.delta_2 = c.drive.delta_1 - delta;
            return rho33_exact(validate_config(c));
        };
        const PeakShape p =
            measure_peak(profile, h.light_shift - 8.0 * f, h.light_shift + 8.0 * f);
        worst_fwhm = std::max(worst_fwhm, std::abs(f - p.fwhm) / p.fwhm);
        ++used_fwhm;
    }

    CheckResult r;
    r.name = "7 approximation hierarchy";
    r.pass = worst_full <= 0.10 && worst_fano <= 0.10 && worst_fwhm <= 0.02 &&
             used_full > 0 && used_fano > 0 && used_fwhm > 0;
    r.detail = "far-detuned worst " + fmt(worst_full) + " (limit 0.10, " +
               std::to_string(used_full) + " pts); peak-profile worst " +
               fmt(worst_fano) + " (limit 0.10, " + std::to_string(used_fano) +
               " pts); width worst " + fmt(worst_fwhm) + " (limit 0.02, " +
               std::to_string(used_fwhm) + " pts)";
    r.seconds = timer.seconds();
    return r;
}

CheckResult check_central_equivalence() {
    Timer timer;
    const double Z = 0.2;
    double worst = 1.0;
    bool pass = true;
    for (double gamma : {1e-4, 1e-3, 1e-2}) {
        for (double w2 : {1.0, 4.0, 10.0}) {
            // Light shift matched to Z, deep in the scattering-dominated
            // regime.
            const double d1a = w2 * w2 / (4.0 * Z);
            const double w1a = 0.02 * Z / w2;
            const ValidatedConfig cfga =
                make_lambda_config(w1a, w2, d1a, d1a, gamma);
            const double ra =
                ratio_at_bright_peak(cfga, Z, PeakAnchor::HoldDelta1).r;

            // Detuning proxy for the infinite limit.
            const double d1b = std::max(1000.0, 10.0 * w2 * w2 / (4.0 * Z));
            const double w1b = 0.005 * w2 / d1b;
            const ValidatedConfig cfgb =
                make_lambda_config(w1b, w2, d1b, d1b, gamma);
            const double rb =
                ratio_at_bright_peak(cfgb, Z, PeakAnchor::HoldDelta1).r;

            const double ratio = ra / rb;
            worst = std::max({worst, ratio, 1.0 / ratio});
            if (!(ratio >= 0.75 && ratio <= 1.0 / 0.75)) pass = false;
        }
    }

    // Large-pump plateau at gamma = 1e-3.
    const double gamma = 1e-3, w2 = 50.0;
    const double d1 = 10.0 * w2 * w2 / (4.0 * Z);
    const double w1 = 0.005 * w2 / d1;
    const ValidatedConfig cfg = make_lambda_config(w1, w2, d1, d1, gamma);
    const double r_plateau =
        ratio_at_bright_peak(cfg, Z, PeakAnchor::HoldDelta1).r;
    const double expected = Z * Z / (gamma * gamma) + 1.0;
    const double plateau_dev = std::abs(r_plateau - expected) / expected;
    if (plateau_dev > 0.10) pass = false;

    CheckResult r;
    r.name = "8 central equivalence (matched light shift vs far detuning)";
    r.pass = pass;
    r.detail = "worst ratio factor " + fmt(worst) +
               " (limit 1.33); plateau r = " + fmt(r_plateau) + " vs " +
               fmt(expected) + " (dev " + fmt(plateau_dev) + ", limit 0.10)";
    r.seconds = timer.seconds();
    return r;
}

CheckResult check_zeno_band(int n, std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    double lo = 1.0, hi = 1.0;
    int used = 0;
    while (used < n) {
        const double d2 = loguni(rng, 5.0, 100.0);
        const double w2 = loguni(rng, 0.2, d2 / 5.0);
        const double m = loguni(rng, 10.0, 100.0);
        const double w1 = w2 / m;
        const double dp0 = w2 * w2 / (4.0 * d2);
        const double r2 = w2 * w2 / (4.0 * d2 * d2);
        const double weff = w2 * w1 / (2.0 * d2);
        const double f = std::sqrt(r2 * r2 + weff * weff * 2.0 / 0.9);
        const double dprime = uni(rng, -5.0, 5.0) * f;

        const ValidatedConfig cfg = make_lambda_config(
            w1, w2, d2 + dp0 + dprime, d2, 0.0, 0.9, 0.1);
        const double dp_actual =
            cfg.two_photon_detuning() - derived_rates(cfg).light_shift;
        const double zeno = zeno_rho33(cfg, dp_actual).value;
        const double dressed = rho33_dressed(cfg).value;
        if (!(dressed > 0.0)) continue;
        const double ratio = zeno / dressed;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        ++used;
    }
    CheckResult r;
    r.name = "9 flopping/measurement model factor-2 band";
    r.pass = lo >= 0.4 && hi <= 2.5;
    r.detail = "ratio range [" + fmt(lo) + ", " + fmt(hi) +
               "] over " + std::to_string(used) + " points (band [0.4, 2.5])";
    r.seconds = timer.seconds();
    return r;
}

CheckResult check_rate_model(int n, std::uint64_t seed) {
    Timer timer;
    ValidationRng rng(seed);
    double worst = 0.0, worst_simplified = 0.0;
    int used = 0;
    int attempts = 0;
    // The sweep stays inside the rate picture's hierarchy G1 >> R >> Gt and
    // below the linewidth washout of the dark feature (delta_1 <= 100 keeps
    // gamma well under the scattering rate at the allowed linewidths).
    while (used < n && ++attempts < 100 * n) {
        const double u = uni(rng, 0.3, 0.7);
        const double d1 = loguni(rng, 20.0, 100.0);
        const double w2 = loguni(rng, 0.5, 4.0);
        const double cap = std::min(u * w2 * w2 / (1.0 - u), u);
        const double w1 = 0.1 * std::sqrt(cap) * uni(rng, 0.3, 1.0);
        const double gl = 1e-3 * w2 * w2 * uni(rng, 0.05, 1.0);
        const ValidatedConfig cfg =
            make_lambda_config(w1, w2, d1, d1, gl, u, 1.0 - u);

        const double R = derived_rates(cfg).scatter_rate;
        const double gt = gamma_tilde(cfg);
        if (!(u >= 10.0 * R && R >= 10.0 * gt)) continue;
        const Flagged dark = rho33_dark(cfg);
        const Flagged model = rate_model_dark(cfg);
        const Flagged simp = rate_model_dark_simplified(cfg);
        if (!dark.valid || !model.valid || dark.value <= 0.0) continue;
        worst = std::max(worst, std::abs(model.value - dark.value) / dark.value);
        worst_simplified = std::max(
            worst_simplified, std::abs(simp.value - dark.value) / dark.value);
        ++used;
    }
    CheckResult r;
    r.name = "10 rate-equation dark model";
    r.pass = worst <= 0.20 && worst_simplified <= 0.20;
    r.detail = "rate model worst dev " + fmt(worst) + ", simplified " +
               fmt(worst_simplified) + " (limit 0.20, " + std::to_string(used) +
               " pts)";
    r.seconds = timer.seconds();
    return r;
}

namespace {

CoolingParams ridge_cooling_params(double omega2) {
    CoolingParams p = figure7_params();
    p.cfg.drive.omega_2 = omega2;
    const double delta2 = omega2 * omega2 / (4.0 * p.nu);
    p.cfg.drive.delta_2 = delta2;
    p.cfg.drive.delta_1 = delta2;  // placeholder for tracking
    const double peak =
        bright_peak_delta(validate_config(p.cfg), PeakAnchor::HoldDelta2);
    p.cfg.drive.delta_1 = delta2 + peak - p.nu;
    return p;
}

// First index where the row reaches half its maximum: the location of the
// rise onto the high-1/q ridge/plateau.
int ridge_index(const std::vector<double>& v) {
    double vmax = 0.0;
    for (double x : v)
        if (std::isfinite(x)) vmax = std::max(vmax, x);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (std::isfinite(v[i]) && v[i] >= 0.5 * vmax)
            return static_cast<int>(i);
    return 0;
}

}  // namespace

CheckResult check_cooling_properties(int surface_grid,
                                     ExecutionPolicy policy) {
    Timer timer;
    std::vector<std::string> failures;

    // (a) reality of the rate coefficients at trap-cooling operating
    // points.  The residue check runs where the light-shift picture holds
    // (matched ridge at delta_2 >= 10 gamma); cooling itself is checked on
    // the resonant-side point as well.
    double worst_residue = 0.0;
    for (double w2 : {1.0, 4.0, 10.0}) {
        const CoolingRates rates = cooling_rates(ridge_cooling_params(w2));
        if (w2 >= 4.0) worst_residue = std::max(worst_residue, rates.im_residue);
        if (!rates.cooling)
            failures.push_back("no cooling at matched light shift, omega_2 = " +
                               fmt(w2));
    }
    if (worst_residue > 1e-10)
        failures.push_back("imaginary residue " + fmt(worst_residue));

    // (b) Lamb-Dicke homogeneity: q is independent of a common eta scale.
    {
        CoolingParams p = ridge_cooling_params(4.0);
        const double q1 = cooling_rates(p).q;
        p.eta1 *= 0.5;
        p.eta2 *= 0.5;
        const double q2 = cooling_rates(p).q;
        if (std::abs(q1 - q2) > 1e-6 * std::abs(q1))
            failures.push_back("eta scaling changed q by " +
                               fmt(std::abs(q1 - q2) / std::abs(q1)));
    }

    // (c) thermal identity.
    {
        CoolingRates rates;
        rates.q = 0.5;
        rates.cooling = true;
        rates.n_bar = 1.0;
        const PhononDistribution dist = steady_state_thermal(rates, 50);
        if (std::abs(dist.mean - 1.0) > 1e-12)
            failures.push_back("thermal mean deviates by " +
                               fmt(std::abs(dist.mean - 1.0)));
        if (std::abs(dist.mean - rates.q / (1.0 - rates.q)) > 1e-12)
            failures.push_back("n_bar identity violated");
    }

    // (d) cooling surface against the selective-excitation surface.
    const SpectralScan r_scan = figure6_scan(surface_grid, policy);
    const SpectralScan q_scan = figure7_scan(surface_grid, policy);
    const double nu = figure7_params().nu;
    const auto omegas = q_scan.axis2.values();
    const auto deltas = q_scan.axis1.values();

    for (double target : {1.0, 4.0, 10.0}) {
        int j = 0;
        for (int jj = 0; jj < q_scan.axis2.n; ++jj)
            if (std::abs(std::log(omegas[jj] / target)) <
                std::abs(std::log(omegas[j] / target)))
                j = jj;
        std::vector<double> row(q_scan.axis1.n);
        for (int i = 0; i < q_scan.axis1.n; ++i) row[i] = q_scan.at(i, j);

        // Ridge tests only apply where the predicted ridge
        // delta_2 = omega_2^2 / (4 nu) is itself far detuned (>= 10 gamma);
        // below that the light-shift formula does not describe the level
        // structure and the row shows ordinary near-resonance features.
        const double predicted = omegas[j] * omegas[j] / (4.0 * nu);
        if (predicted < 10.0) continue;

        const int ridge = ridge_index(row);
        const double off = std::abs(std::log10(deltas[ridge] / predicted));
        if (off > 0.5)
            failures.push_back("ridge at delta_2 = " + fmt(deltas[ridge]) +
                               " vs predicted " + fmt(predicted) +
                               " (omega_2 = " + fmt(omegas[j]) + ")");

        // Monotone rise past the ridge: one grid cell of slack plus a 5%
        // per-step tolerance on the median-filtered row (ripple-level
        // comparisons only; the genuine post-ridge structure of the
        // selective-excitation surface drops by factors, not percent).
        const std::vector<double> smooth = median3(row);
        int violations = 0;
        for (int i = ridge; i + 1 < q_scan.axis1.n; ++i)
            if (smooth[i + 1] < smooth[i] * 0.95) ++violations;
        if (violations > 1)
            failures.push_back("1/q not monotone past ridge (omega_2 = " +
                               fmt(omegas[j]) + ", " +
                               std::to_string(violations) + " drops)");
    }

    double max_r = 0.0, max_q = 0.0;
    for (std::size_t k = 0; k < r_scan.values.size(); ++k)
        if (r_scan.valid[k]) max_r = std::max(max_r, r_scan.values[k]);
    for (std::size_t k = 0; k < q_scan.values.size(); ++k)
        if (q_scan.valid[k]) max_q = std::max(max_q, q_scan.values[k]);
    if (!(max_q < max_r))
        failures.push_back("max(1/q) = " + fmt(max_q) +
                           " not below max(r) = " + fmt(max_r));

    const double secs = timer.seconds();
    if (secs >= 300.0) failures.push_back("surfaces took " + fmt(secs) + " s");

    CheckResult r;
    r.name = "11 cooling properties";
    r.pass = failures.empty();
    if (failures.empty()) {
        r.detail = "residue " + fmt(worst_residue) +
                   "; eta scaling, thermal identity ok; ridge/monotone ok; "
                   "max(1/q) = " +
                   fmt(max_q) + " < max(r) = " + fmt(max_r) + " on " +
                   std::to_string(surface_grid) + "x" +
                   std::to_string(surface_grid) + " grids in " + fmt(secs) +
                   " s";
    } else {
        for (std::size_t i = 0; i < failures.size(); ++i)
            r.detail += (i ? "; " : "") + failures[i];
    }
    r.seconds = secs;
    return r;
}

CheckResult check_figure2() {
    Timer timer;
    std::vector<std::string> failures;

    {
        SystemConfig c = figure2_config(0.0).get();
        const double at_zero = rho33_exact(validate_config(c));
        if (at_zero != 0.0)
            failures.push_back("zero-linewidth profile not null at delta = 0");
    }
    for (double gl : {0.05, 0.1}) {
        const ValidatedConfig base = figure2_config(gl);
        auto profile = [&](double delta) {
            SystemConfig c = base.get();
            c.drive.delta_1 = c.drive.delta_2 + delta;
            return rho33_exact(validate_config(c));
        };
        // The filled-in dark minimum sits between the probe wing and the
        // two-photon peak; its displacement is compared in magnitude.
        const double dmin = golden_min(profile, -1.2, 0.05);
        const double predicted = absorption_minimum_offset(base);
        const double dev = std::abs(std::abs(dmin) - predicted) / predicted;
        if (dev > 0.15)
            failures.push_back("minimum at " + fmt(dmin) + " vs offset " +
                               fmt(predicted) + " (dev " + fmt(dev) +
                               ") at linewidth " + fmt(gl));
    }

    CheckResult r;
    r.name = "5 absorption-profile reproduction";
    r.pass = failures.empty();
    r.detail = failures.empty()
                   ? "null at delta = 0; displaced minima match the offset "
                     "formula within 15%"
                   : "";
    for (std::size_t i = 0; i < failures.size(); ++i)
        r.detail += (i ? "; " : "") + failures[i];
    r.seconds = timer.seconds();
    return r;
}

CheckResult check_figure3() {
    Timer timer;
    std::vector<std::string> failures;
    const ValidatedConfig base = figure3_config();
    auto profile = [&](double d1) {
        SystemConfig c = base.get();
        c.drive.delta_1 = d1;
        return rho33_exact(validate_config(c));
    };
    const double w2 = base.drive().omega_2;
    const double peak_plus = golden_max(profile, 0.5, 3.5);
    const double peak_minus = golden_max(profile, -3.5, -0.5);
    if (std::abs(peak_plus - w2 / 2.0) > 0.1)
        failures.push_back("upper peak at " + fmt(peak_plus));
    if (std::abs(peak_minus + w2 / 2.0) > 0.1)
        failures.push_back("lower peak at " + fmt(peak_minus));

    const double C = std::sqrt(2.0);
    const double peak = two_level_population(0.2, 1.0, C, 0.0);
    const double expected = 1.0 / (2.0 + 1.0 / (C * C * 0.2 * 0.2));
    if (std::abs(peak - expected) > 1e-6)
        failures.push_back("two-level peak " + fmt(peak));
    // Lorentzian shape: half maximum exactly at the half-width point.
    const double hw = std::sqrt(0.25 + C * C * 0.2 * 0.2 / 2.0);
    if (std::abs(two_level_population(0.2, 1.0, C, hw) - peak / 2.0) > 1e-12)
        failures.push_back("two-level profile not Lorentzian");

    CheckResult r;
    r.name = "6 resonant-discrimination reproduction";
    r.pass = failures.empty();
    r.detail = failures.empty()
                   ? "dressed peaks at +/- " + fmt(w2 / 2.0) +
                         " within 0.1; two-level peak and shape exact"
                   : "";
    for (std::size_t i = 0; i < failures.size(); ++i)
        r.detail += (i ? "; " : "") + failures[i];
    r.seconds = timer.seconds();
    return r;
}

std::vector<CheckResult> run_validation(const ValidationCounts& counts,
                                        ExecutionPolicy policy,
                                        std::uint64_t seed) {
    std::vector<CheckResult> results;
    results.push_back(check_equivalence(counts.equivalence, policy, seed));
    results.push_back(check_evolve_consistency(counts.evolve, policy, seed + 1));
    results.push_back(check_dark_exactness(counts.dark, seed + 2));
    results.push_back(
        check_resonant_reduction(counts.resonant, counts.ladder, seed + 3));
    results.push_back(
        check_approximation_hierarchy(counts.hierarchy, counts.fwhm, seed + 4));
    results.push_back(check_central_equivalence());
    results.push_back(check_zeno_band(counts.zeno, seed + 5));
    results.push_back(check_rate_model(counts.rate_model, seed + 6));
    results.push_back(check_cooling_properties(counts.surface_grid, policy));
    return results;
}

}  // namespace eit
