#include <doctest.h>

#include <random>

#include "eit/errors.hpp"
#include "eit/params.hpp"

using namespace eit;

TEST_CASE("coherence rates from zero-linewidth lasers") {
    AtomParams atom{1.0, 0.5, 0.5, true};
    LaserDrive drive{};
    const CoherenceModel c = derive_coherence_rates(atom, drive, Topology::Lambda);
    CHECK(c.gamma_13 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.gamma_23 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(c.gamma_12 == 0.0);
    CHECK(c.alpha == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("coherence rates with equal finite linewidths") {
    AtomParams atom{1.0, 0.5, 0.5, true};
    LaserDrive drive{};
    drive.linewidth_1 = 0.1;
    drive.linewidth_2 = 0.1;
    const CoherenceModel c = derive_coherence_rates(atom, drive, Topology::Lambda);
    CHECK(c.gamma_13 == doctest::Approx(0.55).epsilon(1e-15));
    CHECK(c.gamma_23 == doctest::Approx(0.55).epsilon(1e-15));
    CHECK(c.gamma_12 == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(c.alpha == doctest::Approx(1.1).epsilon(1e-15));
}

TEST_CASE("ladder coherence rates include the intermediate decay") {
    AtomParams atom{1.0, 1.0, 0.5, true};
    LaserDrive drive{};
    const CoherenceModel c = derive_coherence_rates(atom, drive, Topology::Ladder);
    CHECK(c.gamma_12 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(c.gamma_23 == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(c.gamma_13 == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("negative rates are rejected") {
    AtomParams atom{1.0, -0.5, 0.5, false};
    CHECK_THROWS_AS(derive_coherence_rates(atom, LaserDrive{}, Topology::Lambda),
                    ConfigError);
}

TEST_CASE("validation lists the offending fields") {
    SystemConfig cfg;
    cfg.atom = AtomParams{1.0, 0.5, 0.5, true};
    cfg.drive.omega_1 = -1.0;
    std::vector<std::string> bad = check_config(cfg);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "omega_1 negative");

    SystemConfig cfg2;
    cfg2.atom = AtomParams{1.0, 0.6, 0.5, true};
    bad = check_config(cfg2);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "branching exceeds total");
}

TEST_CASE("standard absorption-profile parameters validate") {
    SystemConfig cfg;
    cfg.atom = AtomParams{1.0, 0.5, 0.5, true};
    cfg.drive = LaserDrive{0.1, 1.0, 3.0, 3.0, 0.05, 0.05};
    cfg.coherence.mode = CoherenceMode::DerivedLambda;
    CHECK(check_config(cfg).empty());
    const ValidatedConfig v = validate_config(cfg);
    CHECK(v.coherence().gamma_12 == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(v.analytic_ok());
}

TEST_CASE("derivation is idempotent under an explicit round trip") {
    const ValidatedConfig v = make_lambda_config(0.3, 2.0, 1.0, -2.0, 0.2);
    SystemConfig explicit_cfg = v.get();
    explicit_cfg.coherence.mode = CoherenceMode::Explicit;
    const ValidatedConfig v2 = validate_config(explicit_cfg);
    CHECK(v2.coherence().gamma_13 == v.coherence().gamma_13);
    CHECK(v2.coherence().gamma_23 == v.coherence().gamma_23);
    CHECK(v2.coherence().gamma_12 == v.coherence().gamma_12);
    CHECK(v2.coherence().alpha == v.coherence().alpha);
}

TEST_CASE("equal linewidths give exactly equal upper coherence rates") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double l = u(rng);
        AtomParams atom{1.0, 0.5, 0.5, true};
        LaserDrive drive{};
        drive.linewidth_1 = l;
        drive.linewidth_2 = l;
        const CoherenceModel c =
            derive_coherence_rates(atom, drive, Topology::Lambda);
        CHECK(c.gamma_13 == c.gamma_23);  // exact equality
    }
}

TEST_CASE("coherence mode must match the topology") {
    SystemConfig cfg;
    cfg.atom = AtomParams{1.0, 0.5, 0.5, true};
    cfg.topology = Topology::Ladder;
    cfg.coherence.mode = CoherenceMode::DerivedLambda;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
}

TEST_CASE("closed ladder requires the total to equal the upper branch") {
    SystemConfig cfg;
    cfg.atom = AtomParams{1.0, 0.8, 0.5, true};
    cfg.topology = Topology::Ladder;
    cfg.coherence.mode = CoherenceMode::DerivedLadder;
    CHECK_THROWS_AS(validate_config(cfg), ConfigError);
    cfg.atom.gamma_1 = 1.0;
    CHECK_NOTHROW(validate_config(cfg));
}

TEST_CASE("unequal upper coherence rates disable the closed forms") {
    const ValidatedConfig v =
        make_explicit_config(0.1, 1.0, 0.0, 0.0, 0.5, 0.6, 0.1);
    CHECK(!v.analytic_ok());
}
