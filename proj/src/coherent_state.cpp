#include "cascade/coherent_state.hpp"

#include "cascade/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace cascade {

namespace {

constexpr std::size_t kRatioWindow = 10;
constexpr std::size_t kConsecutiveHits = 10;

/// Unnormalized log-weights ln(|alpha|^{2n} / (n! ([f(n)]!)^2)), grown on demand.
class LogWeights {
public:
    explicit LogWeights(const FieldParams& params)
        : log_alpha_sq_(2.0 * std::log(params.alpha_mag)), f_(params.f) {
        logs_.push_back(0.0);
    }

    double operator[](std::size_t n) {
        while (logs_.size() <= n) {
            const std::size_t k = logs_.size();
            if (k > f_.max_n()) {
                throw DomainError("field nonlinearity table ends at n = " + std::to_string(f_.max_n()) +
                                  " before the coherent-state series converged");
            }
            log_f_fact_ += std::log(f_.eval(static_cast<unsigned>(k)));
            logs_.push_back(static_cast<double>(k) * log_alpha_sq_ - std::lgamma(static_cast<double>(k) + 1.0) -
                            2.0 * log_f_fact_);
        }
        return logs_[n];
    }

private:
    double log_alpha_sq_;
    const NonlinearitySpec& f_;
    double log_f_fact_ = 0.0;
    std::vector<double> logs_;
};

double log_add(double a, double b) {
    if (a < b) {
        std::swap(a, b);
    }
    if (b == -std::numeric_limits<double>::infinity()) {
        return a;
    }
    return a + std::log1p(std::exp(b - a));
}

/// ln of a geometric upper bound on sum_{k>n} w_k, where w_k = exp(logw(k)).
/// Uses the largest successive ratio over the next kRatioWindow terms.
template <typename LogTerm>
double log_tail_estimate(std::size_t n, LogTerm&& logw) {
    double max_log_ratio = -std::numeric_limits<double>::infinity();
    for (std::size_t k = n + 1; k <= n + kRatioWindow; ++k) {
        max_log_ratio = std::max(max_log_ratio, logw(k + 1) - logw(k));
    }
    if (max_log_ratio >= 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return logw(n + 1) - std::log(-std::expm1(max_log_ratio));
}

struct Truncation {
    std::size_t n_max = 0;
    double tail = 0.0;
};

Truncation truncate(const FieldParams& params, double eps, std::size_t cap) {
    validate(params);
    if (!(eps > 0.0 && eps < 1.0)) {
        throw InvalidSpec("tail tolerance eps must lie in (0, 1), got " + std::to_string(eps));
    }
    if (params.alpha_mag == 0.0) {
        return {};
    }

    LogWeights logt(params);
    auto log_weighted = [&](std::size_t k) { return logt[k] + 2.0 * std::log(static_cast<double>(k) + 1.0); };
    auto log_plain = [&](std::size_t k) { return logt[k]; };
    const double log_eps = std::log(eps);

    double log_norm = -std::numeric_limits<double>::infinity();
    std::size_t summed = 0;  // terms 0..summed-1 are in log_norm
    std::size_t hits = 0;
    Truncation first_hit;

    for (std::size_t n = 0;; ++n) {
        if (n > cap) {
            throw ConvergenceError("coherent-state truncation order exceeded cap " + std::to_string(cap) +
                                   " (field " + params.f.describe() + ", |alpha| = " +
                                   std::to_string(params.alpha_mag) + "); the series appears divergent");
        }
        const std::size_t horizon = n + kRatioWindow + 1;
        while (summed <= horizon) {
            log_norm = log_add(log_norm, logt[summed]);
            ++summed;
        }
        const double tail = log_tail_estimate(n, log_plain) - log_norm;
        const double weighted = log_tail_estimate(n, log_weighted) - log_norm;
        if (tail < log_eps && weighted < log_eps) {
            if (hits == 0) {
                first_hit = {n, std::exp(tail)};
            }
            if (++hits == kConsecutiveHits) {
                return first_hit;
            }
        } else {
            hits = 0;
        }
    }
}

}  // namespace

void validate(const FieldParams& params) {
    if (!std::isfinite(params.alpha_mag) || params.alpha_mag < 0.0) {
        throw InvalidSpec("|alpha| must be finite and non-negative, got " + std::to_string(params.alpha_mag));
    }
    if (!std::isfinite(params.alpha_phase)) {
        throw InvalidSpec("coherent-state phase must be finite");
    }
    if (params.f.kind() == NonlinearitySpec::Kind::GilmorePerelomov && params.alpha_mag >= 1.0) {
        throw InvalidSpec("Gilmore-Perelomov coherent states require |alpha| < 1, got " +
                          std::to_string(params.alpha_mag));
    }
}

std::size_t truncation_order(const FieldParams& params, double eps, std::size_t cap) {
    return truncate(params, eps, cap).n_max;
}

CoefficientVector coefficients(const FieldParams& params, double eps, std::size_t cap) {
    const Truncation trunc = truncate(params, eps, cap);

    CoefficientVector out;
    out.n_max = trunc.n_max;
    out.tail_bound = trunc.tail;
    out.phase = params.alpha_phase;

    if (params.alpha_mag == 0.0) {
        out.moduli = {1.0};
        out.coeffs = {complex(1.0, 0.0)};
        return out;
    }

    LogWeights logt(params);
    std::vector<double> logs(trunc.n_max + 1);
    for (std::size_t n = 0; n <= trunc.n_max; ++n) {
        logs[n] = logt[n];
    }
    const double peak = *std::max_element(logs.begin(), logs.end());
    double log_norm = -std::numeric_limits<double>::infinity();
    for (double l : logs) {
        log_norm = log_add(log_norm, l - peak);
    }
    log_norm += peak;

    out.moduli.resize(logs.size());
    std::transform(logs.begin(), logs.end(), out.moduli.begin(),
                   [&](double l) { return std::exp(0.5 * (l - log_norm)); });

    // Renormalize exactly on the retained range.
    const double sum_sq = std::transform_reduce(out.moduli.begin(), out.moduli.end(), 0.0, std::plus<>(),
                                                [](double m) { return m * m; });
    const double scale = 1.0 / std::sqrt(sum_sq);
    for (double& m : out.moduli) {
        m *= scale;
    }

    out.coeffs.resize(out.moduli.size());
    for (std::size_t n = 0; n < out.moduli.size(); ++n) {
        out.coeffs[n] = std::polar(out.moduli[n], static_cast<double>(n) * params.alpha_phase);
    }
    return out;
}

}  // namespace cascade
