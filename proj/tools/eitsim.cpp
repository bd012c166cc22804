#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "eit/config_io.hpp"
#include "eit/cooling.hpp"
#include "eit/discrim.hpp"
#include "eit/errors.hpp"
#include "eit/figures.hpp"
#include "eit/scan.hpp"
#include "eit/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitValidation = 3;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::fwrite(content.data(), 1, content.size(), stdout);
    else
        eit::write_file(out_path, content);
}

void apply_threads(int threads) {
#if defined(_OPENMP)
    if (threads <= 0) {
        if (const char* env = std::getenv("EITSIM_THREADS")) {
            const int n = std::atoi(env);
            if (n > 0) threads = n;
        }
    }
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

struct GridPair {
    eit::GridAxis a1;
    eit::GridAxis a2;
};

GridPair surface_grids(const std::vector<std::string>& specs) {
    if (specs.empty())
        return {eit::figure_surface_delta_axis(), eit::figure_surface_omega_axis()};
    if (specs.size() != 2)
        throw eit::ConfigError("surface scans need exactly two --grid specs");
    return {eit::GridAxis::parse(specs[0]), eit::GridAxis::parse(specs[1])};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "eitsim - driven three-level atoms: two-photon spectra, state "
        "discrimination and sideband cooling"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for scans (default: all, or EITSIM_THREADS)");

    std::string config_path, out_path = "-", format = "csv";
    std::vector<std::string> grid_specs;
    int figure_id = 0;

    auto add_io = [&](CLI::App* cmd, bool needs_config) {
        if (needs_config)
            cmd->add_option("--config", config_path, "input JSON")->required();
        cmd->add_option("--out", out_path, "output path ('-' for stdout)");
        cmd->add_option("--format", format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* profile =
        app.add_subcommand("profile", "steady-state rho33 along one parameter");
    add_io(profile, true);
    profile->add_option("--grid", grid_specs,
                        "axis spec <name>:<lo>:<hi>:<n>:<log|lin>")
        ->required();

    CLI::App* scan_r = app.add_subcommand(
        "scan-r", "discrimination ratio over (delta_2, omega_2)");
    add_io(scan_r, true);
    scan_r->add_option("--grid", grid_specs, "two axis specs");

    CLI::App* scan_cool = app.add_subcommand(
        "scan-cooling", "cooling figure of merit 1/q over (delta_2, omega_2)");
    add_io(scan_cool, true);
    scan_cool->add_option("--grid", grid_specs, "two axis specs");

    CLI::App* figure =
        app.add_subcommand("figure", "bundled figure data sets (2, 3, 6, 7)");
    add_io(figure, false);
    figure->add_option("--figure", figure_id, "figure id")
        ->required()
        ->check(CLI::IsMember({2, 3, 6, 7}));
    figure->add_option("--grid", grid_specs,
                       "optional grid overrides for the surface figures");

    CLI::App* validate =
        app.add_subcommand("validate", "run the cross-validation suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    apply_threads(threads);
    const auto policy = eit::ExecutionPolicy::Parallel;

    try {
        if (profile->parsed()) {
            if (grid_specs.size() != 1)
                throw eit::ConfigError("profile needs exactly one --grid");
            const eit::SystemConfig cfg =
                eit::parse_system_config(eit::read_file(config_path));
            const eit::SpectralScan scan = eit::scan_rho33_profile(
                cfg, eit::GridAxis::parse(grid_specs[0]), policy);
            emit(out_path, format == "csv" ? scan.to_csv() : scan.to_json());
        } else if (scan_r->parsed()) {
            const eit::DiscriminationScenario s =
                eit::parse_scenario(eit::read_file(config_path));
            const GridPair g = surface_grids(grid_specs);
            const eit::SpectralScan scan = eit::scan_surface(s, g.a1, g.a2, policy);
            emit(out_path, format == "csv" ? scan.to_csv() : scan.to_json());
        } else if (scan_cool->parsed()) {
            const eit::CoolingParams p =
                eit::parse_cooling_params(eit::read_file(config_path));
            const GridPair g = surface_grids(grid_specs);
            const eit::SpectralScan scan = eit::scan_cooling(p, g.a1, g.a2, policy);
            emit(out_path, format == "csv" ? scan.to_csv() : scan.to_json());
        } else if (figure->parsed()) {
            if (figure_id == 2) {
                const eit::Table t = eit::figure2_table(policy);
                emit(out_path, format == "csv" ? t.to_csv() : t.to_json());
            } else if (figure_id == 3) {
                const eit::Table t = eit::figure3_table(policy);
                emit(out_path, format == "csv" ? t.to_csv() : t.to_json());
            } else {
                eit::SpectralScan scan;
                if (grid_specs.empty()) {
                    scan = figure_id == 6 ? eit::figure6_scan(60, policy)
                                          : eit::figure7_scan(60, policy);
                } else {
                    const GridPair g = surface_grids(grid_specs);
                    scan = figure_id == 6
                               ? eit::scan_surface(eit::figure6_scenario(), g.a1,
                                                   g.a2, policy)
                               : eit::scan_cooling(eit::figure7_params(), g.a1,
                                                   g.a2, policy);
                }
                emit(out_path, format == "csv" ? scan.to_csv() : scan.to_json());
            }
        } else if (validate->parsed()) {
            const auto results = eit::run_validation(
                eit::ValidationCounts::reduced(), policy);
            bool all_pass = true;
            for (const auto& r : results) {
                std::printf("[%s] %s: %s (%.2f s)\n", r.pass ? "PASS" : "FAIL",
                            r.name.c_str(), r.detail.c_str(), r.seconds);
                all_pass = all_pass && r.pass;
            }
            if (!all_pass) return kExitValidation;
        }
    } catch (const eit::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const eit::PreconditionError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const eit::Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitNumeric;
    }
    return kExitOk;
}
