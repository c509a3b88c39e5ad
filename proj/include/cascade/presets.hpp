#pragma once

#include "cascade/coherent_state.hpp"
#include "cascade/dynamics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cascade {

struct RunConfig {
    FieldParams field;
    CouplingParams coupling;
    /// Coherent-state phase used in the squeezing parameters.
    double phi = 0.0;
    double tau_max = 50.0;
    std::size_t tau_steps = 1001;
    double eps = kDefaultTailEps;
    bool verify = false;
    /// Empty means standard output.
    std::string output_path;
};

/// Throws InvalidSpec on a malformed configuration.
void validate(const RunConfig& config);

/// A parameter the published figures leave unstated, and the value assumed for it.
struct Assumption {
    /// CLI flag that overrides it, e.g. "alpha-mag".
    std::string flag;
    std::string note;
};

struct Preset {
    std::string name;
    RunConfig config;
    std::string description;
    std::vector<Assumption> assumptions;
};

const std::vector<Preset>& preset_registry();

/// Throws UnknownPreset listing the available names.
const Preset& find_preset(const std::string& name);

inline RunConfig load_preset(const std::string& name) { return find_preset(name).config; }

}  // namespace cascade
