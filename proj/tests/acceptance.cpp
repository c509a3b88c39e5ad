// Acceptance suite: one PASS/FAIL line per criterion; exit status is the number of failures.

#include "cascade/observables.hpp"
#include "cascade/oracle.hpp"
#include "cascade/presets.hpp"
#include "cascade/scan.hpp"
#include "reference_models.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

namespace {

using cascade::CouplingParams;
using cascade::NonlinearitySpec;

const char* const kPresets[] = {"canonical", "gp", "bg-01", "bg-1", "cs-gp-coupling"};

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double worst_deviation(const cascade::ObservableSample& a, const cascade::ObservableSample& b) {
    double q = 0.0;
    if (a.mandel_q.has_value() != b.mandel_q.has_value()) {
        q = INFINITY;
    } else if (a.mandel_q) {
        q = std::abs(*a.mandel_q - *b.mandel_q);
    }
    return std::max({std::abs(a.mean_n - b.mean_n), std::abs(a.s_z - b.s_z), q, std::abs(a.s1 - b.s1),
                     std::abs(a.s2 - b.s2)});
}

Outcome oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    std::size_t largest_n_max = 0;
    for (const char* name : kPresets) {
        const auto config = cascade::load_preset(name);
        const auto coeffs = cascade::coefficients(config.field, config.eps);
        largest_n_max = std::max(largest_n_max, coeffs.n_max);
        for (int k = 0; k < 200; ++k) {
            const double tau = reference::uniform(0.0, 50.0);
            const auto closed = cascade::sample(coeffs, config.coupling, config.phi, tau);
            const auto ref =
                cascade::oracle::observables_from_state(cascade::oracle::integrate(coeffs, config.coupling, tau));
            worst = std::max(worst, worst_deviation(closed, ref.sample));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= 1e-8 && seconds < 60.0 && largest_n_max <= 400,
            fmt("max |dev| = %.3g (tol 1e-8), %.2f s (limit 60 s), largest N_max = %zu (limit 400)", worst,
                seconds, largest_n_max)};
}

Outcome unitarity_and_bookkeeping() {
    double worst_norm = 0.0;
    double worst_excitation = 0.0;
    for (const char* name : kPresets) {
        const auto config = cascade::load_preset(name);
        const auto coeffs = cascade::coefficients(config.field, config.eps);
        double initial = 0.0;
        for (std::size_t n = 0; n < coeffs.size(); ++n) initial += n * coeffs.probability(n);
        for (double tau : cascade::tau_grid(config)) {
            const auto state = cascade::evolve(coeffs, config.coupling, tau);
            worst_norm = std::max(worst_norm, std::abs(state.norm_squared() - 1.0));
            worst_excitation =
                std::max(worst_excitation, std::abs(state.mean_photon_number() + state.inversion() - initial));
        }
    }
    return {worst_norm < 1e-12 && worst_excitation < 1e-12,
            fmt("max norm residual = %.3g, max excitation drift = %.3g (tol 1e-12)", worst_norm, worst_excitation)};
}

Outcome vacuum_emission() {
    const auto vacuum = cascade::coefficients({0.0, 0.0, NonlinearitySpec::unit()});
    const CouplingParams couplings[] = {{NonlinearitySpec::unit(), 0.3},
                                        {NonlinearitySpec::gilmore_perelomov(1.5), 0.01},
                                        {NonlinearitySpec::barut_girardello(0.5), 0.1},
                                        {NonlinearitySpec::barut_girardello(2.0), 1.0}};
    double worst = 0.0;
    for (const auto& coupling : couplings) {
        const double rate = coupling.beta * coupling.g.eval(1);
        for (int i = 0; i <= 2000; ++i) {
            const double tau = 20.0 * i / 2000.0;
            const double s = std::sin(rate * tau);
            worst = std::max(worst, std::abs(cascade::atomic_inversion(vacuum, coupling, tau) + s * s));
        }
    }
    return {worst <= 1e-12, fmt("max |<S_z> + sin^2(beta g(1) tau)| = %.3g (tol 1e-12)", worst)};
}

Outcome gp_anchors() {
    auto config = cascade::load_preset("gp");
    config.tau_max = 50.0;
    config.tau_steps = 5001;
    const auto scan = cascade::run_scan(config);
    const double n0 = scan.samples.front().mean_n;
    const double q0 = *scan.samples.front().mandel_q;
    double plateau = 0.0;
    int count = 0;
    double min_sz = INFINITY;
    for (const auto& s : scan.samples) {
        if (s.tau >= 30.0 && s.tau <= 50.0) {
            plateau += s.mean_n;
            ++count;
        }
        min_sz = std::min(min_sz, s.s_z);
    }
    plateau /= count;
    const bool pass = std::abs(n0 - 12.7895) <= 1e-4 && std::abs(q0 - 4.2632) <= 1e-3 &&
                      std::abs(plateau - 12.3) <= 0.5 && min_sz >= -1e-10;
    return {pass, fmt("<n>(0) = %.6f (12.7895 +- 1e-4), Q(0) = %.5f (4.2632 +- 1e-3), "
                      "plateau[30,50] = %.4f (12.3 +- 0.5), min <S_z> = %.3g (>= -1e-10)",
                      n0, q0, plateau, min_sz)};
}

Outcome canonical_anchors() {
    double worst_q = 0.0;
    double worst_s = 0.0;
    for (double mag : {0.3, 1.0, 3.0, 8.0, 15.0}) {
        for (double phase : {0.0, 1.3}) {
            const auto coeffs = cascade::coefficients({mag, phase, NonlinearitySpec::unit()});
            const CouplingParams coupling{NonlinearitySpec::unit(), 0.01};
            worst_q = std::max(worst_q, std::abs(*cascade::mandel_q(coeffs, coupling, 0.0)));
            const auto sq = cascade::squeezing(coeffs, coupling, phase, 0.0);
            worst_s = std::max({worst_s, std::abs(sq.s1), std::abs(sq.s2)});
        }
    }
    auto config = cascade::load_preset("canonical");
    config.tau_max = 40.0;
    config.tau_steps = 4001;
    const auto scan = cascade::run_scan(config);
    const double n0 = scan.samples.front().mean_n;
    double plateau_n = 0.0;
    double plateau_sz = 0.0;
    int count = 0;
    for (const auto& s : scan.samples) {
        if (s.tau >= 20.0 && s.tau <= 40.0) {
            plateau_n += s.mean_n;
            plateau_sz += s.s_z;
            ++count;
        }
    }
    plateau_n /= count;
    plateau_sz /= count;
    const bool pass = worst_q <= 1e-10 && worst_s <= 1e-10 && std::abs(plateau_n - n0) < 2.0 &&
                      plateau_sz > 0.3 && plateau_sz < 0.7;
    return {pass, fmt("max |Q(0)| = %.3g, max |S_j(0)| = %.3g (tol 1e-10); |alpha| = 8: <n> plateau %.4f vs "
                      "<n>(0) %.4f (|diff| < 2), <S_z> plateau %.4f in (0.3, 0.7)",
                      worst_q, worst_s, plateau_n, n0, plateau_sz)};
}

Outcome two_level_reduction() {
    struct Case {
        cascade::FieldParams field;
        NonlinearitySpec g;
    };
    const Case cases[] = {{{8.0, 0.0, NonlinearitySpec::unit()}, NonlinearitySpec::unit()},
                          {{0.9, 0.0, NonlinearitySpec::gilmore_perelomov(1.5)}, NonlinearitySpec::gilmore_perelomov(1.5)},
                          {{2.0, 0.0, NonlinearitySpec::barut_girardello(0.5)}, NonlinearitySpec::barut_girardello(0.5)},
                          {{5.0, 0.0, NonlinearitySpec::unit()}, NonlinearitySpec::gilmore_perelomov(1.5)}};
    double worst = 0.0;
    for (const auto& c : cases) {
        const auto coeffs = cascade::coefficients(c.field);
        const CouplingParams coupling{c.g, 0.0};
        std::vector<double> p(coeffs.size());
        for (std::size_t n = 0; n < p.size(); ++n) p[n] = coeffs.probability(n);
        for (int i = 0; i <= 400; ++i) {
            const double tau = 20.0 * i / 400.0;
            const auto ref = reference::two_level_jcm(p, c.g, tau);
            worst = std::max({worst, std::abs(cascade::atomic_inversion(coeffs, coupling, tau) - ref.upper),
                              std::abs(cascade::mean_photon_number(coeffs, coupling, tau) - ref.mean_n),
                              std::abs(cascade::mean_photon_number_squared(coeffs, coupling, tau) - ref.mean_n2) /
                                  std::max(1.0, ref.mean_n2)});
        }
    }
    return {worst <= 1e-12, fmt("max deviation from the two-level closed form = %.3g (tol 1e-12)", worst)};
}

Outcome squeezing_sign() {
    auto config = cascade::load_preset("gp");
    config.phi = std::numbers::pi / 2;
    config.tau_max = 50.0;
    config.tau_steps = 5001;
    const auto scan = cascade::run_scan(config);
    double min_s1 = INFINITY;
    double min_product = INFINITY;
    std::size_t squeezed = 0;
    for (const auto& s : scan.samples) {
        min_s1 = std::min(min_s1, s.s1);
        min_product = std::min(min_product, (s.s1 + 1.0) * (s.s2 + 1.0));
        squeezed += s.s1 < -1e-4;
    }
    return {squeezed > 0 && min_product >= 1.0 - 1e-10,
            fmt("min S1 = %.4f on %zu grid points below -1e-4; min (S1+1)(S2+1) = %.6f (>= 1 - 1e-10)", min_s1,
                squeezed, min_product)};
}

Outcome bg_sub_poissonian() {
    auto config = cascade::load_preset("bg-1");
    config.tau_max = 50.0;
    config.tau_steps = 5001;
    const auto scan = cascade::run_scan(config);
    std::size_t negative = 0;
    for (const auto& s : scan.samples) negative += s.mandel_q && *s.mandel_q < 0.0;
    const double fraction = static_cast<double>(negative) / static_cast<double>(scan.samples.size());
    return {fraction >= 0.2, fmt("Q < 0 on %.1f%% of [0, 50] (threshold 20%%)", 100.0 * fraction)};
}

Outcome omega0_independence() {
    double worst = 0.0;
    for (const char* name : kPresets) {
        const auto config = cascade::load_preset(name);
        const auto coeffs = cascade::coefficients(config.field, config.eps);
        for (int k = 0; k < 40; ++k) {
            const double tau = reference::uniform(0.0, 50.0);
            const auto at_rest = cascade::oracle::observables_from_state(
                cascade::oracle::integrate(coeffs, config.coupling, tau, 0.0));
            const auto rotating = cascade::oracle::observables_from_state(
                cascade::oracle::integrate(coeffs, config.coupling, tau, 5.0));
            worst = std::max(worst, worst_deviation(at_rest.sample, rotating.sample));
        }
    }
    return {worst < 1e-10, fmt("max |dev| between omega0 = 0 and 5 = %.3g (tol 1e-10)", worst)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"1 oracle equivalence", oracle_equivalence},
        {"2 unitarity and excitation bookkeeping", unitarity_and_bookkeeping},
        {"3 vacuum spontaneous emission", vacuum_emission},
        {"4 GP preset anchors", gp_anchors},
        {"5 canonical Poissonian anchor and plateau", canonical_anchors},
        {"6 two-level reduction", two_level_reduction},
        {"7 GP squeezing sign structure", squeezing_sign},
        {"8 BG sub-Poissonian statistics", bg_sub_poissonian},
        {"9 omega0 independence", omega0_independence},
    };
    int failures = 0;
    for (const auto& [name, check] : criteria) {
        Outcome result{false, ""};
        try {
            result = check();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        failures += !result.pass;
        std::printf("[%s] %s: %s\n", result.pass ? "PASS" : "FAIL", name, result.detail.c_str());
    }
    std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
    return failures;
}
