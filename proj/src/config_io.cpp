#include "eit/config_io.hpp"

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "eit/errors.hpp"

namespace eit {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) {
                ok = true;
                break;
            }
        if (!ok)
            throw ConfigError(std::string("unknown key '") + it.key() + "' in " +
                              where);
    }
}

double get_number(const json& j, const char* key, const char* where) {
    if (!j.contains(key))
        throw ConfigError(std::string("missing key '") + key + "' in " + where);
    if (!j[key].is_number())
        throw ConfigError(std::string("key '") + key + "' in " + where +
                          " must be a number");
    return j[key].get<double>();
}

double get_number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    return j[key].get<double>();
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ConfigError("config is not valid JSON");
    return j;
}

SystemConfig system_config_from_json(const json& j) {
    reject_unknown_keys(j, {"atom", "drive", "coherence", "topology"}, "config");
    SystemConfig cfg;

    if (!j.contains("atom") || !j.contains("drive") || !j.contains("coherence") ||
        !j.contains("topology"))
        throw ConfigError("config needs atom, drive, coherence and topology");

    const json& a = j["atom"];
    reject_unknown_keys(a, {"gamma_total", "gamma_1", "gamma_2", "closed"},
                        "atom");
    cfg.atom.gamma_total = get_number(a, "gamma_total", "atom");
    cfg.atom.gamma_1 = get_number(a, "gamma_1", "atom");
    cfg.atom.gamma_2 = get_number(a, "gamma_2", "atom");
    if (!a.contains("closed") || !a["closed"].is_boolean())
        throw ConfigError("atom.closed must be a boolean");
    cfg.atom.closed = a["closed"].get<bool>();

    const json& d = j["drive"];
    reject_unknown_keys(d,
                        {"omega_1", "omega_2", "delta_1", "delta_2",
                         "linewidth_1", "linewidth_2"},
                        "drive");
    cfg.drive.omega_1 = get_number(d, "omega_1", "drive");
    cfg.drive.omega_2 = get_number(d, "omega_2", "drive");
    cfg.drive.delta_1 = get_number(d, "delta_1", "drive");
    cfg.drive.delta_2 = get_number(d, "delta_2", "drive");
    cfg.drive.linewidth_1 = get_number_or(d, "linewidth_1", 0.0);
    cfg.drive.linewidth_2 = get_number_or(d, "linewidth_2", 0.0);

    const std::string topo = j["topology"].is_string()
                                 ? j["topology"].get<std::string>()
                                 : std::string();
    if (topo == "lambda")
        cfg.topology = Topology::Lambda;
    else if (topo == "ladder")
        cfg.topology = Topology::Ladder;
    else
        throw ConfigError("topology must be 'lambda' or 'ladder'");

    const json& c = j["coherence"];
    reject_unknown_keys(c, {"mode", "gamma_13", "gamma_23", "gamma_12", "alpha"},
                        "coherence");
    const std::string mode =
        c.contains("mode") && c["mode"].is_string() ? c["mode"].get<std::string>()
                                                    : std::string();
    if (mode == "derived-lambda") {
        cfg.coherence.mode = CoherenceMode::DerivedLambda;
    } else if (mode == "derived-ladder") {
        cfg.coherence.mode = CoherenceMode::DerivedLadder;
    } else if (mode == "explicit") {
        cfg.coherence.mode = CoherenceMode::Explicit;
        cfg.coherence.gamma_13 = get_number(c, "gamma_13", "coherence");
        cfg.coherence.gamma_23 = get_number(c, "gamma_23", "coherence");
        cfg.coherence.gamma_12 = get_number(c, "gamma_12", "coherence");
        if (c.contains("alpha")) {
            const double alpha = get_number(c, "alpha", "coherence");
            const double derived =
                cfg.atom.gamma_total > 0.0
                    ? 2.0 * cfg.coherence.gamma_13 / cfg.atom.gamma_total
                    : 0.0;
            if (std::abs(alpha - derived) > 1e-12 * std::max(1.0, derived))
                throw ConfigError("alpha inconsistent with 2*gamma_13/gamma_total");
        }
    } else {
        throw ConfigError(
            "coherence.mode must be 'derived-lambda', 'derived-ladder' or "
            "'explicit'");
    }
    if (cfg.coherence.mode != CoherenceMode::Explicit)
        for (const char* k : {"gamma_13", "gamma_23", "gamma_12", "alpha"})
            if (c.contains(k))
                throw ConfigError(std::string("coherence key '") + k +
                                  "' only applies to explicit mode");
    return cfg;
}

json system_config_to_json(const SystemConfig& cfg) {
    json j;
    j["atom"] = {{"gamma_total", cfg.atom.gamma_total},
                 {"gamma_1", cfg.atom.gamma_1},
                 {"gamma_2", cfg.atom.gamma_2},
                 {"closed", cfg.atom.closed}};
    j["drive"] = {{"omega_1", cfg.drive.omega_1},
                  {"omega_2", cfg.drive.omega_2},
                  {"delta_1", cfg.drive.delta_1},
                  {"delta_2", cfg.drive.delta_2},
                  {"linewidth_1", cfg.drive.linewidth_1},
                  {"linewidth_2", cfg.drive.linewidth_2}};
    switch (cfg.coherence.mode) {
        case CoherenceMode::DerivedLambda:
            j["coherence"] = {{"mode", "derived-lambda"}};
            break;
        case CoherenceMode::DerivedLadder:
            j["coherence"] = {{"mode", "derived-ladder"}};
            break;
        case CoherenceMode::Explicit:
            j["coherence"] = {{"mode", "explicit"},
                              {"gamma_13", cfg.coherence.gamma_13},
                              {"gamma_23", cfg.coherence.gamma_23},
                              {"gamma_12", cfg.coherence.gamma_12}};
            break;
    }
    j["topology"] = cfg.topology == Topology::Lambda ? "lambda" : "ladder";
    return j;
}

}  // namespace

SystemConfig parse_system_config(const std::string& json_text) {
    return system_config_from_json(parse_text(json_text));
}

DiscriminationScenario parse_scenario(const std::string& json_text) {
    const json j = parse_text(json_text);
    reject_unknown_keys(j, {"kind", "Z", "C", "C1", "C2", "cfg"}, "scenario");
    DiscriminationScenario s;
    const std::string kind =
        j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>()
                                                    : std::string();
    if (kind == "single-photon-benchmark")
        s.kind = ScenarioKind::SinglePhotonBenchmark;
    else if (kind == "resonant-lambda")
        s.kind = ScenarioKind::ResonantLambda;
    else if (kind == "two-lambda-offset")
        s.kind = ScenarioKind::TwoLambdaOffset;
    else if (kind == "degenerate-coupling")
        s.kind = ScenarioKind::DegenerateCoupling;
    else
        throw ConfigError("unknown scenario kind");
    s.Z = get_number_or(j, "Z", 0.0);
    if (s.Z < 0.0) throw ConfigError("Z negative");
    if (j.contains("C")) s.C1 = get_number(j, "C", "scenario");
    if (j.contains("C1")) s.C1 = get_number(j, "C1", "scenario");
    if (j.contains("C2")) s.C2 = get_number(j, "C2", "scenario");
    if (!(s.C1 > 0.0) || !(s.C2 > 0.0))
        throw ConfigError("coupling ratios must be positive");
    if (!j.contains("cfg")) throw ConfigError("scenario needs a cfg");
    s.cfg = system_config_from_json(j["cfg"]);
    return s;
}

CoolingParams parse_cooling_params(const std::string& json_text) {
    const json j = parse_text(json_text);
    reject_unknown_keys(j, {"cfg", "nu", "eta1", "eta2", "alpha1", "alpha2"},
                        "cooling config");
    CoolingParams p;
    if (!j.contains("cfg")) throw ConfigError("cooling config needs a cfg");
    p.cfg = system_config_from_json(j["cfg"]);
    p.nu = get_number(j, "nu", "cooling config");
    p.eta1 = get_number(j, "eta1", "cooling config");
    p.eta2 = get_number(j, "eta2", "cooling config");
    p.alpha1 = get_number_or(j, "alpha1", 1.0 / 3.0);
    p.alpha2 = get_number_or(j, "alpha2", 1.0 / 3.0);
    std::vector<std::string> bad = check_cooling_params(p);
    if (!bad.empty()) throw ConfigError(bad);
    return p;
}

std::string system_config_json(const SystemConfig& cfg) {
    return system_config_to_json(cfg).dump(2);
}

std::string system_config_json_compact(const SystemConfig& cfg) {
    return system_config_to_json(cfg).dump();
}

std::string scenario_json(const DiscriminationScenario& s) {
    json j;
    switch (s.kind) {
        case ScenarioKind::SinglePhotonBenchmark:
            j["kind"] = "single-photon-benchmark";
            break;
        case ScenarioKind::ResonantLambda:
            j["kind"] = "resonant-lambda";
            break;
        case ScenarioKind::TwoLambdaOffset:
            j["kind"] = "two-lambda-offset";
            break;
        case ScenarioKind::DegenerateCoupling:
            j["kind"] = "degenerate-coupling";
            break;
    }
    j["Z"] = s.Z;
    j["C1"] = s.C1;
    j["C2"] = s.C2;
    j["cfg"] = system_config_to_json(s.cfg);
    return j.dump(2);
}

std::string cooling_params_json(const CoolingParams& p) {
    json j;
    j["cfg"] = system_config_to_json(p.cfg);
    j["nu"] = p.nu;
    j["eta1"] = p.eta1;
    j["eta2"] = p.eta2;
    j["alpha1"] = p.alpha1;
    j["alpha2"] = p.alpha2;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + path);
    out << content;
}

}  // namespace eit
