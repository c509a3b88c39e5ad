#include "cascade/scan.hpp"

#include "cascade/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <ostream>
#include <thread>

namespace cascade {

namespace {

double q_deviation(const std::optional<double>& a, const std::optional<double>& b) {
    if (a.has_value() != b.has_value()) {
        return std::numeric_limits<double>::infinity();
    }
    return a ? std::abs(*a - *b) : 0.0;
}

Deviation compare(const ObservableSample& closed, const ObservableSample& reference) {
    return {std::abs(closed.mean_n - reference.mean_n), std::abs(closed.s_z - reference.s_z),
            q_deviation(closed.mandel_q, reference.mandel_q), std::abs(closed.s1 - reference.s1),
            std::abs(closed.s2 - reference.s2)};
}

/// Runs body(i) for i in [0, count) on up to `threads` workers; rethrows the first failure.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; ++w) {
            workers.emplace_back([&, w] {
                try {
                    for (std::size_t i = w; i < count; i += threads) {
                        body(i);
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace

double Deviation::max() const { return std::max({mean_n, s_z, mandel_q, s1, s2}); }

double ScanResult::max_deviation() const {
    double worst = 0.0;
    for (const auto& d : deviations) {
        if (d) {
            worst = std::max(worst, d->max());
        }
    }
    return worst;
}

std::vector<double> tau_grid(const RunConfig& config) {
    std::vector<double> grid(config.tau_steps);
    const double last = static_cast<double>(config.tau_steps - 1);
    for (std::size_t i = 0; i < config.tau_steps; ++i) {
        grid[i] = config.tau_max * (static_cast<double>(i) / last);
    }
    return grid;
}

std::vector<std::size_t> verification_rows(std::size_t tau_steps) {
    std::vector<std::size_t> rows;
    if (tau_steps == 0) {
        return rows;
    }
    const double last = static_cast<double>(tau_steps - 1);
    for (std::size_t k = 0; k < kVerifyPoints; ++k) {
        const auto row = static_cast<std::size_t>(std::lround(last * static_cast<double>(k) / (kVerifyPoints - 1)));
        if (rows.empty() || rows.back() != row) {
            rows.push_back(row);
        }
    }
    return rows;
}

ScanResult run_scan(const RunConfig& config, unsigned threads) {
    validate(config);
    const CoefficientVector coeffs = coefficients(config.field, config.eps);
    const auto grid = tau_grid(config);

    ScanResult result;
    result.n_max = coeffs.n_max;
    result.tail_bound = coeffs.tail_bound;
    result.samples.resize(grid.size());
    parallel_for(grid.size(), threads,
                 [&](std::size_t i) { result.samples[i] = sample(coeffs, config.coupling, config.phi, grid[i]); });

    result.deviations.resize(grid.size());
    if (config.verify) {
        result.verified = true;
        // The oracle state carries phi as its phase so its quadratures match the reported S1, S2.
        CoefficientVector rotated = coeffs;
        rotated.phase = config.phi;
        for (std::size_t n = 0; n < rotated.size(); ++n) {
            rotated.coeffs[n] = std::polar(rotated.moduli[n], static_cast<double>(n) * config.phi);
        }
        const auto rows = verification_rows(grid.size());
        parallel_for(rows.size(), threads, [&](std::size_t k) {
            const std::size_t row = rows[k];
            const auto state = oracle::integrate(rotated, config.coupling, grid[row]);
            result.deviations[row] = compare(result.samples[row], oracle::observables_from_state(state).sample);
        });
    }
    return result;
}

void write_csv(std::ostream& out, const ScanResult& result) {
    const auto old_precision = out.precision(17);
    out << "tau,mean_n,s_z,mandel_q,s1,s2,norm_residual";
    if (result.verified) {
        out << ",dev_mean_n,dev_s_z,dev_mandel_q,dev_s1,dev_s2";
    }
    out << '\n';
    for (std::size_t i = 0; i < result.samples.size(); ++i) {
        const auto& s = result.samples[i];
        out << s.tau;
        out << ',';
        out << s.mean_n;
        out << ',';
        out << s.s_z;
        out << ',';
        if (s.mandel_q) {
            out << *s.mandel_q;
        }
        out << ',';
        out << s.s1;
        out << ',';
        out << s.s2;
        out << ',';
        out << s.norm_residual;
        if (result.verified) {
            if (const auto& d = result.deviations[i]) {
                for (double v : {d->mean_n, d->s_z, d->mandel_q, d->s1, d->s2}) {
                    out << ',';
                    out << v;
                }
            } else {
                out << ",,,,,";
            }
        }
        out << '\n';
    }
    out.precision(old_precision);
}

}  // namespace cascade
