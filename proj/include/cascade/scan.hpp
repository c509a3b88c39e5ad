#pragma once

#include "cascade/observables.hpp"
#include "cascade/presets.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

namespace cascade {

/// Absolute closed-form vs oracle deviations at one verified grid point.
struct Deviation {
    double mean_n = 0.0;
    double s_z = 0.0;
    double mandel_q = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;

    double max() const;
};

inline constexpr std::size_t kVerifyPoints = 16;
inline constexpr double kVerifyTolerance = 1e-6;

struct ScanResult {
    std::vector<ObservableSample> samples;
    std::size_t n_max = 0;
    double tail_bound = 0.0;
    /// Per-row deviation, filled only at the verified grid points.
    std::vector<std::optional<Deviation>> deviations;
    bool verified = false;

    double max_deviation() const;
    bool verification_passed() const { return !verified || max_deviation() <= kVerifyTolerance; }
};

/// tau_i = tau_max * i / (tau_steps - 1).
std::vector<double> tau_grid(const RunConfig& config);

/// Grid rows the oracle checks: kVerifyPoints evenly spaced indices including both ends.
std::vector<std::size_t> verification_rows(std::size_t tau_steps);

/// Builds the coefficients once and evaluates every observable on the tau grid,
/// in parallel over tau. With config.verify the oracle is run at verification_rows().
/// Results are identical regardless of thread count.
ScanResult run_scan(const RunConfig& config, unsigned threads = 0);

/// Columns: tau,mean_n,s_z,mandel_q,s1,s2,norm_residual, plus dev_* columns when verified.
/// An undefined Mandel Q is an empty field.
void write_csv(std::ostream& out, const ScanResult& result);

}  // namespace cascade
