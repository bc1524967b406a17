#include "taucube/run_config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"

namespace taucube {

namespace {

using nlohmann::json;

const json& require_key(const json& parent, const std::string& parent_path, const char* key) {
    const auto it = parent.find(key);
    if (it == parent.end()) {
        const std::string path = parent_path.empty() ? key : parent_path + "." + key;
        throw ConfigError(path, "missing");
    }
    return *it;
}

double as_finite_number(const json& value, const std::string& path) {
    if (!value.is_number()) throw ConfigError(path, "expected a number");
    const double x = value.get<double>();
    if (!std::isfinite(x)) throw ConfigError(path, "must be finite");
    return x;
}

long as_integer(const json& value, const std::string& path) {
    if (!value.is_number_integer()) throw ConfigError(path, "expected an integer");
    return value.get<long>();
}

std::string format17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("<file>", "cannot open '" + path + "'");

    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("<json>", e.what());
    }
    if (!root.is_object()) throw ConfigError("<json>", "top level must be an object");

    RunConfig cfg;

    const json& grid = require_key(root, "", "grid");
    if (!grid.is_object()) throw ConfigError("grid", "expected an object");
    const long n = as_integer(require_key(grid, "grid", "n_points"), "grid.n_points");
    if (n < 4 || (n & (n - 1)) != 0)
        throw ConfigError("grid.n_points", "must be a power of two, at least 4");
    cfg.grid.n_points = static_cast<std::size_t>(n);
    cfg.grid.length = as_finite_number(require_key(grid, "grid", "length"), "grid.length");
    if (cfg.grid.length <= 0.0) throw ConfigError("grid.length", "must be positive");

    const json& k = require_key(root, "", "k");
    if (!k.is_object()) throw ConfigError("k", "expected an object with re and im");
    cfg.k = Complex(as_finite_number(require_key(k, "k", "re"), "k.re"),
                    as_finite_number(require_key(k, "k", "im"), "k.im"));

    cfg.t_final = as_finite_number(require_key(root, "", "t_final"), "t_final");

    const long steps = as_integer(require_key(root, "", "steps"), "steps");
    if (steps < 1) throw ConfigError("steps", "must be at least 1");
    cfg.steps = static_cast<std::size_t>(steps);

    const json& initial = require_key(root, "", "initial");
    if (!initial.is_object()) throw ConfigError("initial", "expected an object");
    const json& preset = require_key(initial, "initial", "preset");
    if (!preset.is_string()) throw ConfigError("initial.preset", "expected a string");
    const std::string name = preset.get<std::string>();
    if (name == "gaussian") {
        cfg.preset = Preset::gaussian;
    } else if (name == "plane-wave") {
        cfg.preset = Preset::plane_wave;
    } else if (name == "box") {
        cfg.preset = Preset::box;
    } else {
        throw ConfigError("initial.preset", "unknown preset '" + name +
                                                "' (expected gaussian, plane-wave or box)");
    }

    if (cfg.preset == Preset::plane_wave) {
        cfg.mode = as_integer(require_key(initial, "initial", "mode"), "initial.mode");
        const long half = n / 2;
        if (cfg.mode < -half || cfg.mode >= half)
            throw ConfigError("initial.mode", "outside the signed alias range [-n/2, n/2)");
    }

    if (const auto it = initial.find("component"); it != initial.end()) {
        const long component = as_integer(*it, "initial.component");
        if (component < 1 || component > 3)
            throw ConfigError("initial.component", "must be 1, 2 or 3");
        cfg.component = static_cast<int>(component);
    }

    if (const auto it = root.find("output_path"); it != root.end()) {
        if (!it->is_string()) throw ConfigError("output_path", "expected a string");
        cfg.output_path = it->get<std::string>();
    }

    return cfg;
}

StateVector initial_from_config(const RunConfig& cfg) {
    return make_initial(cfg.grid, cfg.preset, cfg.mode, cfg.component);
}

const char* preset_name(Preset preset) {
    switch (preset) {
        case Preset::gaussian: return "gaussian";
        case Preset::plane_wave: return "plane-wave";
        case Preset::box: return "box";
    }
    return "gaussian";
}

std::string config_to_json(const RunConfig& cfg) {
    std::string s = "{\n";
    s += "  \"grid\": {\"n_points\": " + std::to_string(cfg.grid.n_points) +
         ", \"length\": " + format17(cfg.grid.length) + "},\n";
    s += "  \"k\": {\"re\": " + format17(cfg.k.real()) + ", \"im\": " + format17(cfg.k.imag()) +
         "},\n";
    s += "  \"t_final\": " + format17(cfg.t_final) + ",\n";
    s += "  \"steps\": " + std::to_string(cfg.steps) + ",\n";
    s += "  \"initial\": {\"preset\": \"" + std::string(preset_name(cfg.preset)) + "\"";
    if (cfg.preset == Preset::plane_wave) s += ", \"mode\": " + std::to_string(cfg.mode);
    s += ", \"component\": " + std::to_string(cfg.component) + "},\n";
    s += "  \"output_path\": \"" + cfg.output_path + "\"\n";
    s += "}\n";
    return s;
}

}  // namespace taucube
