#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "eit/params.hpp"
#include "eit/scan.hpp"

namespace eit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Sample counts for the cross-validation suite.  full() is what the
// acceptance run uses; reduced() keeps the whole suite under a minute.
struct ValidationCounts {
    int equivalence = 10000;
    int evolve = 100;
    int dark = 1000;
    int resonant = 1000;
    int ladder = 300;
    int hierarchy = 400;
    int fwhm = 24;
    int zeno = 1000;
    int rate_model = 300;
    int surface_grid = 60;

    static ValidationCounts full() { return ValidationCounts{}; }
    static ValidationCounts reduced() {
        ValidationCounts c;
        c.equivalence = 1000;
        c.evolve = 20;
        c.dark = 200;
        c.resonant = 200;
        c.ladder = 100;
        c.hierarchy = 150;
        c.fwhm = 10;
        c.zeno = 250;
        c.rate_model = 120;
        c.surface_grid = 36;
        return c;
    }
};

using ValidationRng = std::mt19937_64;

// Random-config distributions used by the suite (and reusable in tests).
ValidatedConfig random_equivalence_config(ValidationRng& rng);
ValidatedConfig random_relaxing_config(ValidationRng& rng);

// Individual checks; names carry the criterion number they implement.
CheckResult check_equivalence(int n, ExecutionPolicy policy, std::uint64_t seed);
CheckResult check_evolve_consistency(int n, ExecutionPolicy policy,
                                     std::uint64_t seed);
CheckResult check_dark_exactness(int n, std::uint64_t seed);
CheckResult check_resonant_reduction(int n_resonant, int n_ladder,
                                     std::uint64_t seed);
CheckResult check_approximation_hierarchy(int n, int n_fwhm, std::uint64_t seed);
CheckResult check_central_equivalence();
CheckResult check_zeno_band(int n, std::uint64_t seed);
CheckResult check_rate_model(int n, std::uint64_t seed);
CheckResult check_cooling_properties(int surface_grid, ExecutionPolicy policy);

// Figure-reproduction checks (acceptance only; not part of `validate`).
CheckResult check_figure2();
CheckResult check_figure3();

// Criteria 1-4 and 7-11 at the given counts, in order.
std::vector<CheckResult> run_validation(const ValidationCounts& counts,
                                        ExecutionPolicy policy,
                                        std::uint64_t seed = 0x5eed5eedULL);

}  // namespace eit
