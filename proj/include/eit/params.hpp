#pragma once

#include <string>
#include <vector>

#include "eit/errors.hpp"

namespace eit {

// Level scheme of the three-level system.  Lambda: levels 1 and 2 below a
// common upper level 3.  Ladder: level 2 above level 3, decaying 2 -> 3.
enum class Topology { Lambda, Ladder };

// Decay rates of the upper level.  All rates are in units of the caller's
// choice; the CLI and the tests use gamma_total = 1.
struct AtomParams {
    double gamma_total = 1.0;  // total decay rate of level 3
    double gamma_1 = 0.5;      // branching rate 3 -> 1
    double gamma_2 = 0.5;      // branching rate into level 2 (Lambda), or the
                               // 2 -> 3 rate (Ladder)
    bool closed = true;        // no decay out of the three-level space
};

// The two driving fields.  Laser 1 ("probe") couples 1-3, laser 2 ("pump")
// couples 2-3.
struct LaserDrive {
    double omega_1 = 0.0;     // probe Rabi frequency
    double omega_2 = 0.0;     // pump Rabi frequency
    double delta_1 = 0.0;     // probe detuning from the 1-3 transition
    double delta_2 = 0.0;     // pump detuning from the 2-3 transition
    double linewidth_1 = 0.0; // probe laser linewidth
    double linewidth_2 = 0.0; // pump laser linewidth
};

enum class CoherenceMode { DerivedLambda, DerivedLadder, Explicit };

// Decay rates of the three coherences.  In the derived modes they follow
// from the laser linewidths and the level scheme; in explicit mode they are
// free parameters.
struct CoherenceModel {
    double gamma_13 = 0.0;  // decay rate of rho_13
    double gamma_23 = 0.0;  // decay rate of rho_23
    double gamma_12 = 0.0;  // decay rate of rho_12 (written gamma below)
    double alpha = 0.0;     // 2 * gamma_13 / gamma_total, stored once
    CoherenceMode mode = CoherenceMode::DerivedLambda;
};

struct SystemConfig {
    AtomParams atom{};
    LaserDrive drive{};
    CoherenceModel coherence{};
    Topology topology = Topology::Lambda;
};

// A SystemConfig that passed validate_config: coherence rates are concrete,
// alpha is filled in, and every invariant holds.
class ValidatedConfig {
public:
    const SystemConfig& get() const { return cfg_; }
    const AtomParams& atom() const { return cfg_.atom; }
    const LaserDrive& drive() const { return cfg_.drive; }
    const CoherenceModel& coherence() const { return cfg_.coherence; }
    Topology topology() const { return cfg_.topology; }

    // Two-photon detuning delta_1 - delta_2.
    double two_photon_detuning() const {
        return cfg_.drive.delta_1 - cfg_.drive.delta_2;
    }
    // True when gamma_13 == gamma_23 within tolerance, which the closed-form
    // steady state requires.
    bool analytic_ok() const { return analytic_ok_; }

private:
    friend ValidatedConfig validate_config(const SystemConfig&);
    ValidatedConfig(SystemConfig cfg, bool analytic_ok)
        : cfg_(std::move(cfg)), analytic_ok_(analytic_ok) {}
    SystemConfig cfg_;
    bool analytic_ok_;
};

// Coherence decay rates from atom decay and laser linewidths.
//   Lambda: gamma_13 = (G + l1)/2, gamma_23 = (G + l2)/2, gamma = (l1+l2)/2
//   Ladder: gamma_23 = (G + G2 + l2)/2, gamma = (G2 + l1 + l2)/2
// Throws ConfigError on negative inputs.
CoherenceModel derive_coherence_rates(const AtomParams& atom,
                                      const LaserDrive& drive,
                                      Topology topology);

// Returns every violated invariant, empty if the config is valid.  For the
// derived coherence modes the rates are checked against the derivation.
std::vector<std::string> check_config(const SystemConfig& cfg);

// Returns the validated config with derived coherence rates and alpha
// filled in, or throws ConfigError listing all violations.
ValidatedConfig validate_config(const SystemConfig& cfg);

// Convenience builder: a closed Lambda atom with gamma_total = 1, equal
// laser linewidths and derived coherence rates.
ValidatedConfig make_lambda_config(double omega1, double omega2,
                                   double delta1, double delta2,
                                   double laser_linewidth = 0.0,
                                   double gamma1 = 0.5, double gamma2 = 0.5);

// Same but with the coherence rates given directly.
ValidatedConfig make_explicit_config(double omega1, double omega2,
                                     double delta1, double delta2,
                                     double gamma13, double gamma23,
                                     double gamma12, double gamma1 = 0.5,
                                     double gamma2 = 0.5);

// Closed ladder atom (gamma_total = gamma_1) with derived coherence rates.
ValidatedConfig make_ladder_config(double omega1, double omega2,
                                   double delta1, double delta2,
                                   double gamma2, double laser_linewidth = 0.0);

}  // namespace eit
