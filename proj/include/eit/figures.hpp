#pragma once

#include <string>
#include <vector>

#include "eit/cooling.hpp"
#include "eit/discrim.hpp"
#include "eit/params.hpp"
#include "eit/scan.hpp"

namespace eit {

// Small column table for the line-plot outputs; same deterministic
// formatting rules as SpectralScan.
struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> columns;  // one vector per header
    std::vector<std::pair<std::string, std::string>> metadata;

    std::string to_csv() const;
    std::string to_json() const;
};

// Canonical parameter sets for the four bundled figures (units of the
// upper-state width).
//   2: two-photon absorption profiles at linewidths {0, 0.05, 0.1}
//   3: resonant discrimination, three-level vs two-level profile
//   6: selective-excitation ratio surface, Z = 0.2, gamma = 0.001
//   7: cooling surface 1/q, trap frequency 0.2, gamma = 0.001
ValidatedConfig figure2_config(double gamma_linewidth);
ValidatedConfig figure3_config();
DiscriminationScenario figure6_scenario();
CoolingParams figure7_params();
GridAxis figure_surface_delta_axis(int n = 60);
GridAxis figure_surface_omega_axis(int n = 60);

Table figure2_table(ExecutionPolicy policy = ExecutionPolicy::Parallel);
Table figure3_table(ExecutionPolicy policy = ExecutionPolicy::Parallel);
SpectralScan figure6_scan(int n = 60,
                          ExecutionPolicy policy = ExecutionPolicy::Parallel);
SpectralScan figure7_scan(int n = 60,
                          ExecutionPolicy policy = ExecutionPolicy::Parallel);

// rho33 of the numerical steady state along one swept parameter.  Axis
// names: delta (two-photon, probe follows pump), delta_1, delta_2, omega_1,
// omega_2, gamma_12.
SpectralScan scan_rho33_profile(const SystemConfig& base, const GridAxis& axis,
                                ExecutionPolicy policy = ExecutionPolicy::Parallel);

}  // namespace eit
