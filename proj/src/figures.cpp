#include "eit/figures.hpp"

#include <cmath>
#include <limits>

#include "eit/analytic.hpp"
#include "eit/config_io.hpp"
#include "eit/errors.hpp"
#include "eit/obe.hpp"

namespace eit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) {
        buf[i] = digits[h & 0xF];
        h >>= 4;
    }
    return std::string(buf, 16);
}

}  // namespace

std::string Table::to_csv() const {
    std::string meta;
    for (const auto& [k, v] : metadata) meta += k + "=" + v + ";";
    std::string out = "# config_hash=" + hash_hex(fnv1a(meta)) + "\n";
    for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";
    for (std::size_t c = 0; c < headers.size(); ++c) {
        if (c) out += ",";
        out += headers[c];
    }
    out += "\n";
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) out += ",";
            out += format_double(columns[c][r]);
        }
        out += "\n";
    }
    return out;
}

std::string Table::to_json() const {
    std::string meta;
    for (const auto& [k, v] : metadata) meta += k + "=" + v + ";";
    std::string out = "{\"config_hash\":\"" + hash_hex(fnv1a(meta)) + "\",";
    out += "\"metadata\":{";
    for (std::size_t i = 0; i < metadata.size(); ++i) {
        if (i) out += ",";
        out += "\"" + metadata[i].first + "\":\"" + metadata[i].second + "\"";
    }
    out += "},\"columns\":{";
    for (std::size_t c = 0; c < headers.size(); ++c) {
        if (c) out += ",";
        out += "\"" + headers[c] + "\":[";
        for (std::size_t r = 0; r < columns[c].size(); ++r) {
            if (r) out += ",";
            out += std::isfinite(columns[c][r]) ? format_double(columns[c][r])
                                                : "null";
        }
        out += "]";
    }
    out += "}}";
    return out;
}

ValidatedConfig figure2_config(double gamma_linewidth) {
    return make_lambda_config(0.1, 1.0, 3.0, 3.0, gamma_linewidth, 0.5, 0.5);
}

ValidatedConfig figure3_config() {
    return make_lambda_config(0.2, 4.0, 0.0, 0.0, 0.1, 0.5, 0.5);
}

DiscriminationScenario figure6_scenario() {
    DiscriminationScenario s;
    s.kind = ScenarioKind::TwoLambdaOffset;
    s.Z = 0.2;
    s.cfg = make_lambda_config(1e-3, 1.0, 0.0, 0.0, 0.001, 0.5, 0.5).get();
    return s;
}

CoolingParams figure7_params() {
    CoolingParams p;
    p.cfg = make_lambda_config(1e-3, 1.0, 0.0, 0.0, 0.001, 0.5, 0.5).get();
    p.nu = 0.2;
    // Unequal beam projections on the trap axis.  Equal Lamb-Dicke
    // parameters would cancel the two-photon sideband coupling out of the
    // dark superposition exactly (V applied to it carries eta1 - eta2) and
    // leave no cooling resonance at all.
    p.eta1 = 0.05;
    p.eta2 = 0.05 / std::sqrt(2.0);
    p.alpha1 = 1.0 / 3.0;
    p.alpha2 = 1.0 / 3.0;
    return p;
}

GridAxis figure_surface_delta_axis(int n) {
    return GridAxis{"delta_2", 1e-1, 1e3, n, GridScale::Log};
}

GridAxis figure_surface_omega_axis(int n) {
    return GridAxis{"omega_2", 1e-1, 1e2, n, GridScale::Log};
}

Table figure2_table(ExecutionPolicy policy) {
    const std::vector<double> gammas = {0.0, 0.05, 0.1};
    const GridAxis delta_axis{"delta", -1.5, 1.5, 601, GridScale::Linear};
    const auto deltas = delta_axis.values();

    Table t;
    t.headers = {"gamma", "delta", "rho33"};
    t.metadata = {{"figure", "2"},
                  {"config", "omega_1=0.1;omega_2=1;delta_2=3;"
                             "gamma_1=0.5;gamma_2=0.5"}};
    const std::size_t n = gammas.size() * deltas.size();
    for (int c = 0; c < 3; ++c) t.columns.emplace_back(n, 0.0);
    for_each_index(n, policy, [&](std::size_t k) {
        const std::size_t gi = k / deltas.size();
        const std::size_t di = k % deltas.size();
        const double g = gammas[gi];
        const double delta = deltas[di];
        SystemConfig cfg = figure2_config(g).get();
        cfg.drive.delta_1 = cfg.drive.delta_2 + delta;  // probe scans delta
        t.columns[0][k] = g;
        t.columns[1][k] = delta;
        t.columns[2][k] = rho33_exact(validate_config(cfg));
    });
    return t;
}

Table figure3_table(ExecutionPolicy policy) {
    const GridAxis axis{"delta_1", -4.0, 4.0, 801, GridScale::Linear};
    const auto deltas = axis.values();

    Table t;
    t.headers = {"delta_1", "rho33_D", "rho33_B"};
    t.metadata = {{"figure", "3"},
                  {"config", "omega_1=0.2;omega_2=4;delta_2=0;gamma_12=0.1;"
                             "two_level_coupling=sqrt2"}};
    for (int c = 0; c < 3; ++c) t.columns.emplace_back(deltas.size(), 0.0);
    const double C = std::sqrt(2.0);
    for_each_index(deltas.size(), policy, [&](std::size_t k) {
        const double d1 = deltas[k];
        SystemConfig cfg = figure3_config().get();
        cfg.drive.delta_1 = d1;
        t.columns[0][k] = d1;
        t.columns[1][k] = rho33_exact(validate_config(cfg));
        t.columns[2][k] = two_level_population(0.2, 1.0, C, d1);
    });
    return t;
}

SpectralScan figure6_scan(int n, ExecutionPolicy policy) {
    return scan_surface(figure6_scenario(), figure_surface_delta_axis(n),
                        figure_surface_omega_axis(n), policy);
}

SpectralScan figure7_scan(int n, ExecutionPolicy policy) {
    return scan_cooling(figure7_params(), figure_surface_delta_axis(n),
                        figure_surface_omega_axis(n), policy);
}

SpectralScan scan_rho33_profile(const SystemConfig& base, const GridAxis& axis,
                                ExecutionPolicy policy) {
    axis.validate();
    const std::string& name = axis.name;
    const bool known = name == "delta" || name == "delta_1" ||
                       name == "delta_2" || name == "omega_1" ||
                       name == "omega_2" || name == "gamma_12";
    if (!known) throw ConfigError("unknown profile axis '" + name + "'");

    SpectralScan scan;
    scan.quantity = "rho33";
    scan.axis1 = axis;
    scan.values.assign(scan.size(), kNaN);
    scan.valid.assign(scan.size(), false);
    scan.metadata = {{"scenario", "rho33-profile"},
                     {"config", system_config_json_compact(base)},
                     {"method", "steady-state"}};

    const auto xs = axis.values();
    for_each_index(scan.size(), policy, [&](std::size_t k) {
        SystemConfig c = base;
        const double x = xs[k];
        if (name == "delta")
            c.drive.delta_1 = c.drive.delta_2 + x;
        else if (name == "delta_1")
            c.drive.delta_1 = x;
        else if (name == "delta_2")
            c.drive.delta_2 = x;
        else if (name == "omega_1")
            c.drive.omega_1 = x;
        else if (name == "omega_2")
            c.drive.omega_2 = x;
        else {
            // overriding the dephasing rate switches to explicit coherences
            const CoherenceModel derived =
                c.coherence.mode == CoherenceMode::Explicit
                    ? c.coherence
                    : derive_coherence_rates(c.atom, c.drive, c.topology);
            c.coherence = derived;
            c.coherence.mode = CoherenceMode::Explicit;
            c.coherence.gamma_12 = x;
        }
        try {
            const DensityMatrix3 rho =
                steady_state(build_liouvillian(validate_config(c)));
            scan.values[k] = excited_population(rho);
            scan.valid[k] = true;
        } catch (const Error&) {
            // recorded as missing
        }
    });
    return scan;
}

}  // namespace eit
