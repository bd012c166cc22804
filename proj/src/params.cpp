#include "eit/params.hpp"

#include <cmath>

namespace eit {

namespace {

constexpr double kClosureTol = 1e-12;

void require_nonneg(std::vector<std::string>& out, double v, const char* name) {
    if (!(v >= 0.0)) out.push_back(std::string(name) + " negative");
}

}  // namespace

CoherenceModel derive_coherence_rates(const AtomParams& atom,
                                      const LaserDrive& drive,
                                      Topology topology) {
    std::vector<std::string> bad;
    require_nonneg(bad, atom.gamma_total, "gamma_total");
    require_nonneg(bad, atom.gamma_1, "gamma_1");
    require_nonneg(bad, atom.gamma_2, "gamma_2");
    require_nonneg(bad, drive.linewidth_1, "linewidth_1");
    require_nonneg(bad, drive.linewidth_2, "linewidth_2");
    if (!bad.empty()) throw ConfigError(bad);

    const double G = atom.gamma_total;
    const double l1 = drive.linewidth_1;
    const double l2 = drive.linewidth_2;

    CoherenceModel c;
    if (topology == Topology::Lambda) {
        c.mode = CoherenceMode::DerivedLambda;
        c.gamma_13 = (G + l1) / 2.0;
        c.gamma_23 = (G + l2) / 2.0;
        c.gamma_12 = (l1 + l2) / 2.0;
    } else {
        c.mode = CoherenceMode::DerivedLadder;
        c.gamma_13 = (G + l1) / 2.0;
        c.gamma_23 = (G + atom.gamma_2 + l2) / 2.0;
        c.gamma_12 = (atom.gamma_2 + l1 + l2) / 2.0;
    }
    c.alpha = (G > 0.0) ? 2.0 * c.gamma_13 / G : 0.0;
    return c;
}

std::vector<std::string> check_config(const SystemConfig& cfg) {
    std::vector<std::string> bad;
    const AtomParams& a = cfg.atom;
    const LaserDrive& d = cfg.drive;

    require_nonneg(bad, a.gamma_total, "gamma_total");
    require_nonneg(bad, a.gamma_1, "gamma_1");
    require_nonneg(bad, a.gamma_2, "gamma_2");
    require_nonneg(bad, d.omega_1, "omega_1");
    require_nonneg(bad, d.omega_2, "omega_2");
    require_nonneg(bad, d.linewidth_1, "linewidth_1");
    require_nonneg(bad, d.linewidth_2, "linewidth_2");
    if (!std::isfinite(d.delta_1)) bad.push_back("delta_1 not finite");
    if (!std::isfinite(d.delta_2)) bad.push_back("delta_2 not finite");

    if (a.closed) {
        // Closure ties the total rate to the branching rates.  In a ladder
        // scheme level 2 feeds 3, so only gamma_1 drains level 3.
        if (cfg.topology == Topology::Lambda) {
            if (std::abs(a.gamma_total - a.gamma_1 - a.gamma_2) >
                kClosureTol * std::max(a.gamma_total, 1.0)) {
                if (a.gamma_1 + a.gamma_2 > a.gamma_total)
                    bad.push_back("branching exceeds total");
                else
                    bad.push_back("closed atom requires gamma_total = gamma_1 + gamma_2");
            }
        } else {
            if (std::abs(a.gamma_total - a.gamma_1) >
                kClosureTol * std::max(a.gamma_total, 1.0))
                bad.push_back("closed ladder requires gamma_total = gamma_1");
        }
    } else if (cfg.topology == Topology::Lambda &&
               a.gamma_1 + a.gamma_2 >
                   a.gamma_total * (1.0 + kClosureTol) + kClosureTol) {
        bad.push_back("branching exceeds total");
    }

    const CoherenceModel& c = cfg.coherence;
    switch (c.mode) {
        case CoherenceMode::DerivedLambda:
            if (cfg.topology != Topology::Lambda)
                bad.push_back("derived-lambda coherence with ladder topology");
            break;
        case CoherenceMode::DerivedLadder:
            if (cfg.topology != Topology::Ladder)
                bad.push_back("derived-ladder coherence with lambda topology");
            break;
        case CoherenceMode::Explicit:
            require_nonneg(bad, c.gamma_13, "gamma_13");
            require_nonneg(bad, c.gamma_23, "gamma_23");
            require_nonneg(bad, c.gamma_12, "gamma_12");
            break;
    }
    return bad;
}

ValidatedConfig validate_config(const SystemConfig& cfg) {
    std::vector<std::string> bad = check_config(cfg);
    if (!bad.empty()) throw ConfigError(bad);

    SystemConfig out = cfg;
    if (cfg.coherence.mode != CoherenceMode::Explicit) {
        out.coherence = derive_coherence_rates(cfg.atom, cfg.drive, cfg.topology);
    } else {
        out.coherence.alpha = (cfg.atom.gamma_total > 0.0)
                                  ? 2.0 * cfg.coherence.gamma_13 / cfg.atom.gamma_total
                                  : 0.0;
    }
    const bool analytic_ok =
        std::abs(out.coherence.gamma_13 - out.coherence.gamma_23) <=
        kClosureTol * std::max(out.atom.gamma_total, 1.0);
    return ValidatedConfig(std::move(out), analytic_ok);
}

ValidatedConfig make_lambda_config(double omega1, double omega2,
                                   double delta1, double delta2,
                                   double laser_linewidth, double gamma1,
                                   double gamma2) {
    SystemConfig cfg;
    cfg.atom = AtomParams{gamma1 + gamma2, gamma1, gamma2, true};
    cfg.drive = LaserDrive{omega1, omega2, delta1, delta2,
                           laser_linewidth, laser_linewidth};
    cfg.coherence.mode = CoherenceMode::DerivedLambda;
    cfg.topology = Topology::Lambda;
    return validate_config(cfg);
}

ValidatedConfig make_explicit_config(double omega1, double omega2,
                                     double delta1, double delta2,
                                     double gamma13, double gamma23,
                                     double gamma12, double gamma1,
                                     double gamma2) {
    SystemConfig cfg;
    cfg.atom = AtomParams{gamma1 + gamma2, gamma1, gamma2, true};
    cfg.drive = LaserDrive{omega1, omega2, delta1, delta2, 0.0, 0.0};
    cfg.coherence =
        CoherenceModel{gamma13, gamma23, gamma12, 0.0, CoherenceMode::Explicit};
    cfg.topology = Topology::Lambda;
    return validate_config(cfg);
}

ValidatedConfig make_ladder_config(double omega1, double omega2,
                                   double delta1, double delta2,
                                   double gamma2, double laser_linewidth) {
    SystemConfig cfg;
    cfg.atom = AtomParams{1.0, 1.0, gamma2, true};
    cfg.drive = LaserDrive{omega1, omega2, delta1, delta2,
                           laser_linewidth, laser_linewidth};
    cfg.coherence.mode = CoherenceMode::DerivedLadder;
    cfg.topology = Topology::Ladder;
    return validate_config(cfg);
}

}  // namespace eit
