#pragma once

#include <stdexcept>
#include <string>

#include "taucube/state.hpp"
#include "taucube/types.hpp"

namespace taucube {

/// Raised for any config problem; `field()` names the offending entry using
/// dotted-path notation ("grid.n_points").
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error("field '" + field + "': " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// One evolution run as described by a JSON config file.
struct RunConfig {
    GridSpec grid;
    Complex k;
    double t_final = 0.0;
    std::size_t steps = 1;
    Preset preset = Preset::gaussian;
    long mode = 0;  // plane-wave preset only
    int component = 1;
    std::string output_path;  // optional; the CLI --output flag overrides it
};

/// Parses and validates a config file. Throws ConfigError naming the offending
/// field for anything wrong, from unreadable file to out-of-range value.
RunConfig load_run_config(const std::string& path);

/// The initial state the config describes.
StateVector initial_from_config(const RunConfig& cfg);

/// Resolved-config echo written next to every evolve output, with defaults applied.
std::string config_to_json(const RunConfig& cfg);

/// Config-file spelling of a preset ("gaussian", "plane-wave", "box").
const char* preset_name(Preset preset);

}  // namespace taucube
