#include "cascade/presets.hpp"

#include "cascade/errors.hpp"

#include <cmath>
#include <numbers>

namespace cascade {

namespace {

RunConfig make_config(NonlinearitySpec f, NonlinearitySpec g, double alpha_mag, double phase, double beta) {
    RunConfig c;
    c.field = {alpha_mag, phase, std::move(f)};
    c.coupling = {std::move(g), beta};
    c.phi = phase;
    return c;
}

std::vector<Preset> build_registry() {
    using NS = NonlinearitySpec;
    constexpr double half_pi = std::numbers::pi / 2.0;
    std::vector<Preset> out;

    out.push_back({"canonical",
                   make_config(NS::unit(), NS::unit(), 8.0, 0.0, 0.01),
                   "canonical coherent state, intensity-independent coupling (f = g = 1)",
                   {{"alpha-mag", "|alpha| = 8 is assumed (chosen so <n>(0) = 64 sits near the quoted plateau 63.5)"},
                    {"beta", "beta = 0.01 is assumed"},
                    {"alpha-phase", "phi = 0 is assumed"}}});

    out.push_back({"gp",
                   make_config(NS::gilmore_perelomov(1.5), NS::gilmore_perelomov(1.5), 0.9, half_pi, 0.01),
                   "Gilmore-Perelomov state and coupling, f = g = 1/sqrt(n + 2), |alpha| = 0.9, beta = 0.01, phi = pi/2",
                   {}});

    out.push_back({"bg-01",
                   make_config(NS::barut_girardello(0.5), NS::barut_girardello(0.5), 2.0, 0.0, 0.01),
                   "Barut-Girardello state and coupling, f = g = sqrt(n), beta = 0.01",
                   {{"alpha-mag", "|alpha| = 2 is assumed"}, {"alpha-phase", "phi = 0 is assumed"}}});

    out.push_back({"bg-1",
                   make_config(NS::barut_girardello(0.5), NS::barut_girardello(0.5), 2.0, 0.0, 0.1),
                   "Barut-Girardello state and coupling, f = g = sqrt(n), beta = 0.1",
                   {{"alpha-mag", "|alpha| = 2 is assumed"}, {"alpha-phase", "phi = 0 is assumed"}}});

    out.push_back({"cs-gp-coupling",
                   make_config(NS::unit(), NS::gilmore_perelomov(1.5), 5.0, 0.0, 0.01),
                   "canonical coherent state with Gilmore-Perelomov coupling g = 1/sqrt(n + 2 kappa - 1)",
                   {{"kappa-g", "kappa = 3/2 is assumed"},
                    {"alpha-mag", "|alpha| = 5 is assumed"},
                    {"beta", "beta = 0.01 is assumed"},
                    {"alpha-phase", "phi = 0 is assumed"}}});
    return out;
}

}  // namespace

void validate(const RunConfig& config) {
    validate(config.field);
    validate(config.coupling);
    if (!std::isfinite(config.phi)) {
        throw InvalidSpec("phi must be finite");
    }
    if (!std::isfinite(config.tau_max) || config.tau_max <= 0.0) {
        throw InvalidSpec("tau_max must be positive and finite");
    }
    if (config.tau_steps < 2) {
        throw InvalidSpec("tau_steps must be at least 2");
    }
    if (!(config.eps > 0.0 && config.eps < 1.0)) {
        throw InvalidSpec("eps must lie in (0, 1)");
    }
}

const std::vector<Preset>& preset_registry() {
    static const std::vector<Preset> registry = build_registry();
    return registry;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : preset_registry()) {
        if (p.name == name) {
            return p;
        }
    }
    std::string names;
    for (const auto& p : preset_registry()) {
        names += names.empty() ? p.name : ", " + p.name;
    }
    throw UnknownPreset("unknown preset \"" + name + "\"; available: " + names);
}

}  // namespace cascade
