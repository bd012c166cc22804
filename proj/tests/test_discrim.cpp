#include <doctest.h>

#include <cmath>
#include <limits>

#include "eit/analytic.hpp"
#include "eit/discrim.hpp"
#include "eit/errors.hpp"
#include "eit/obe.hpp"
#include "eit/validate.hpp"

using namespace eit;

TEST_CASE("single-photon benchmark ratio") {
    CHECK(benchmark_single_photon_r(0.0, 0.1) == 1.0);
    CHECK(benchmark_single_photon_r(0.1, 0.1) == doctest::Approx(5.0));
    CHECK(benchmark_single_photon_r(0.2, 0.002) ==
          doctest::Approx(40001.0).epsilon(1e-12));
    CHECK_THROWS_AS(benchmark_single_photon_r(0.1, 0.0), PreconditionError);
}

TEST_CASE("resonant discrimination ratio") {
    const double C = std::sqrt(2.0);

    // dephasing-free dark state: unbounded ratio, flagged
    const ResonantDiscrimination inf_r =
        ratio_resonant(make_lambda_config(0.2, 4.0, 0.0, 0.0, 0.0), C);
    CHECK(!inf_r.finite);
    CHECK(std::isinf(inf_r.r));

    // standard example: ratio of the two saturation formulas
    const ValidatedConfig cfg = make_lambda_config(0.2, 4.0, 0.0, 0.0, 0.1);
    const ResonantDiscrimination r = ratio_resonant(cfg, C);
    const double expected = two_level_population(0.2, 1.0, C) /
                            rho33_resonant(cfg);
    CHECK(r.r == doctest::Approx(expected).epsilon(1e-12));
    CHECK(r.r == doctest::Approx(70.468).epsilon(1e-3));

    CHECK_THROWS_AS(ratio_resonant(make_lambda_config(0.2, 4.0, 1.0, 1.0, 0.1), C),
                    PreconditionError);
}

TEST_CASE("weak-probe limits of the resonant ratio") {
    // low saturation: omega_1 << width
    const ValidatedConfig low = make_lambda_config(0.05, 4.0, 0.0, 0.0, 0.1);
    const ResonantDiscrimination rl = ratio_resonant(low, 1.0);
    CHECK(rl.weak_probe_low.valid);
    CHECK(std::abs(rl.weak_probe_low.value - rl.r) / rl.r <= 0.10);

    // high saturation: omega_1 >> width, still weak against the pump
    const ValidatedConfig high = make_lambda_config(30.0, 600.0, 0.0, 0.0, 0.1);
    const ResonantDiscrimination rh = ratio_resonant(high, 1.0);
    CHECK(rh.weak_probe_high.valid);
    CHECK(std::abs(rh.weak_probe_high.value - rh.r) / rh.r <= 0.10);
}

TEST_CASE("two-manifold ratio basics") {
    DiscriminationScenario s;
    s.kind = ScenarioKind::TwoLambdaOffset;
    s.Z = 0.0;
    s.cfg = make_lambda_config(1e-3, 1.0, 5.0, 4.8, 1e-3).get();
    CHECK(ratio_two_lambda(s, 0.2) == 1.0);

    s.Z = 0.2;
    const double r = ratio_two_lambda(s, 0.2);
    CHECK(r > 1.0);
    CHECK(std::isfinite(r));
}

TEST_CASE("matched light shift reproduces the large-detuning ratio") {
    const double Z = 0.2, gamma = 1e-3, w2 = 4.0;
    const double d1 = w2 * w2 / (4.0 * Z);
    const ValidatedConfig cfg =
        make_lambda_config(0.02 * Z / w2, w2, d1, d1, gamma);
    const TrackedRatio t = ratio_at_bright_peak(cfg, Z, PeakAnchor::HoldDelta1);

    DiscriminationScenario s;
    s.Z = Z;
    s.cfg = cfg.get();
    const double formula = r_eit(s);
    CHECK(r_infinity(s) == formula);
    CHECK(std::abs(t.r - formula) / formula <= 0.20);
}

TEST_CASE("large-detuning ratio closed form") {
    DiscriminationScenario s;
    s.Z = 0.2;
    s.cfg = make_lambda_config(1e-4, 1.0, 1000.0, 1000.0, 1e-3).get();
    // alpha = 1.001 at this linewidth
    const double expected =
        (0.04 + 1e-6) / ((2.0 * 1.001 * 0.04 + 1e-3) * 1e-3);
    CHECK(r_infinity(s) == doctest::Approx(expected).epsilon(1e-12));

    // quadratic growth at small pump power
    DiscriminationScenario a = s, b = s;
    a.cfg.drive.omega_2 = 0.03;
    b.cfg.drive.omega_2 = 0.06;
    const double slope =
        std::log(r_infinity(b) / r_infinity(a)) / std::log(2.0);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.025));

    // saturation at large pump power
    DiscriminationScenario big = s;
    big.cfg.drive.omega_2 = 1000.0;
    CHECK(std::abs(r_infinity(big) - 40001.0) / 40001.0 <= 0.01);
}

TEST_CASE("recommended operating point") {
    const OptimalSettings zero = optimal_settings(0.2, 0.0, 1.0);
    CHECK(zero.delta_2 == doctest::Approx(1.05).epsilon(1e-15));
    CHECK(zero.omega_1_bound == doctest::Approx(0.02).epsilon(1e-12));

    // the recommendation maximizes the tracked ratio over the pump detuning
    double best_d2 = 0.0, best_r = 0.0;
    for (int i = 0; i <= 120; ++i) {
        const double d2 = 0.7 + (1.7 - 0.7) * i / 120.0;
        const ValidatedConfig c = make_lambda_config(2e-3, 1.0, d2, d2, 0.0);
        const TrackedRatio t =
            ratio_at_bright_peak(c, 0.2, PeakAnchor::HoldDelta2);
        if (t.r > best_r) {
            best_r = t.r;
            best_d2 = d2;
        }
    }
    CHECK(std::abs(best_d2 - zero.delta_2) <= (1.7 - 0.7) / 120.0 + 1e-12);
}

TEST_CASE("degenerate couplings") {
    const ValidatedConfig cfg =
        make_lambda_config(0.002, 2.0, 50.0, 50.0 - 0.045, 0.01);

    const DegenerateDiscrimination same = ratio_degenerate(cfg, 1.0, 1.0);
    CHECK(same.r == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(same.r_infinity == doctest::Approx(1.0).epsilon(1e-12));

    // strong dephasing drives the limit form to one
    const ValidatedConfig noisy =
        make_lambda_config(0.002, 2.0, 50.0, 50.0 - 0.045, 100.0);
    CHECK(ratio_degenerate(noisy, 1.2, 1.5).r_infinity ==
          doctest::Approx(1.0).epsilon(1e-4));

    // closed form against two full steady-state solves
    const DegenerateDiscrimination deg = ratio_degenerate(cfg, 1.2, 1.5);
    CHECK(deg.valid);
    SystemConfig b = cfg.get();
    b.drive.omega_1 *= 1.2;
    b.drive.omega_2 *= 1.5;
    b.atom.gamma_1 *= 1.2 * 1.2;
    b.atom.gamma_total = b.atom.gamma_1 + b.atom.gamma_2;
    const double rho_b =
        excited_population(steady_state(build_liouvillian(validate_config(b))));
    const double rho_d = excited_population(steady_state(build_liouvillian(cfg)));
    CHECK(std::abs(deg.r - rho_b / rho_d) / (rho_b / rho_d) <= 0.25);
}

TEST_CASE("peak tracking needs a blue anchored detuning and a pump") {
    CHECK_THROWS_AS(bright_peak_delta(make_lambda_config(0.1, 1.0, -3.0, -3.0, 0.0),
                                      PeakAnchor::HoldDelta1),
                    PreconditionError);
    CHECK_THROWS_AS(bright_peak_delta(make_lambda_config(0.1, 0.0, 3.0, 3.0, 0.0),
                                      PeakAnchor::HoldDelta2),
                    PreconditionError);
}

TEST_CASE("ratio on the located peak falls with dephasing") {
    double prev = std::numeric_limits<double>::infinity();
    for (double gl : {1e-4, 1e-3, 1e-2, 1e-1}) {
        const ValidatedConfig cfg = make_lambda_config(2e-3, 1.0, 1.25, 1.25, gl);
        const TrackedRatio t =
            ratio_at_bright_peak(cfg, 0.2, PeakAnchor::HoldDelta1);
        CHECK(t.r <= prev);
        prev = t.r;
    }
}

TEST_CASE("surface scan structure") {
    DiscriminationScenario s;
    s.kind = ScenarioKind::TwoLambdaOffset;
    s.Z = 0.2;
    s.cfg = make_lambda_config(1e-3, 1.0, 0.0, 0.0, 1e-3).get();

    const GridAxis d2{"delta_2", 1.0, 100.0, 6, GridScale::Log};
    const GridAxis w2{"omega_2", 0.5, 8.0, 5, GridScale::Log};

    const SpectralScan serial = scan_surface(s, d2, w2, ExecutionPolicy::Serial);
    const SpectralScan parallel =
        scan_surface(s, d2, w2, ExecutionPolicy::Parallel);
    REQUIRE(serial.values.size() == 30);
    for (std::size_t k = 0; k < serial.values.size(); ++k) {
        CHECK(serial.valid[k] == parallel.valid[k]);
        if (serial.valid[k]) {
            CHECK(serial.values[k] == parallel.values[k]);  // bit identical
            CHECK(serial.values[k] > 0.0);
        }
    }

    // a one-point grid is just the tracked two-manifold ratio
    const GridAxis one_d{"delta_2", 20.0, 20.0, 1, GridScale::Linear};
    const GridAxis one_w{"omega_2", 4.0, 4.0, 1, GridScale::Linear};
    const SpectralScan single = scan_surface(s, one_d, one_w);
    SystemConfig c = s.cfg;
    c.drive.omega_2 = 4.0;
    c.drive.delta_2 = 20.0;
    c.drive.delta_1 = 20.0;
    const TrackedRatio t =
        ratio_at_bright_peak(validate_config(c), s.Z, PeakAnchor::HoldDelta2);
    CHECK(single.at(0, 0) == t.r);
    DiscriminationScenario anchored = s;
    anchored.cfg = c;
    anchored.cfg.drive.delta_1 = 20.0 + t.delta_star;
    CHECK(ratio_two_lambda(anchored, t.delta_star) ==
          doctest::Approx(t.r).epsilon(1e-12));

    // unusable points are recorded as missing, not fatal
    const GridAxis bad_d{"delta_2", -1.0, 20.0, 2, GridScale::Linear};
    const SpectralScan with_missing = scan_surface(s, bad_d, one_w);
    CHECK(!with_missing.valid_at(0, 0));
    CHECK(std::isnan(with_missing.at(0, 0)));
    CHECK(with_missing.valid_at(1, 0));

    CHECK_THROWS_AS(
        scan_surface(s, GridAxis{"gamma", 1.0, 2.0, 2, GridScale::Linear}, one_w),
        ConfigError);
}

TEST_CASE("surface saturates to the benchmark level past the ridge") {
    DiscriminationScenario s;
    s.kind = ScenarioKind::TwoLambdaOffset;
    s.Z = 0.2;
    s.cfg = make_lambda_config(1e-3, 1.0, 0.0, 0.0, 1e-3).get();
    // grid chosen past the ridge delta_2 = omega_2^2 / (4 Z) for every row
    const GridAxis d2{"delta_2", 2e4, 3e5, 4, GridScale::Log};
    const GridAxis w2{"omega_2", 30.0, 100.0, 3, GridScale::Log};
    const SpectralScan scan = scan_surface(s, d2, w2);
    double max_r = 0.0;
    for (std::size_t k = 0; k < scan.values.size(); ++k)
        if (scan.valid[k]) max_r = std::max(max_r, scan.values[k]);
    CHECK(std::abs(max_r - 40001.0) / 40001.0 <= 0.10);
}
