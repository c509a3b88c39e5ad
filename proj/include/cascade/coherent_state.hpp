#pragma once

#include "cascade/nonlinearity.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace cascade {

using complex = std::complex<double>;

/// Initial cavity field |alpha, f>, alpha = alpha_mag * exp(i alpha_phase).
struct FieldParams {
    double alpha_mag = 0.0;
    double alpha_phase = 0.0;
    NonlinearitySpec f;
};

/// Throws InvalidSpec unless alpha_mag is finite and non-negative, and
/// alpha_mag < 1 for a Gilmore-Perelomov field (the states live in the unit disk).
void validate(const FieldParams& params);

/// Truncated Fock expansion C_0..C_{n_max} of the initial field.
struct CoefficientVector {
    std::vector<complex> coeffs;
    /// |C_n|, kept separately so it is independent of the phase.
    std::vector<double> moduli;
    std::size_t n_max = 0;
    /// Estimated probability mass discarded beyond n_max (before renormalization).
    double tail_bound = 0.0;
    /// Coherent-state phase; arg(C_n) = n * phase.
    double phase = 0.0;

    double probability(std::size_t n) const { return moduli[n] * moduli[n]; }
    std::size_t size() const noexcept { return coeffs.size(); }
};

inline constexpr double kDefaultTailEps = 1e-12;
inline constexpr std::size_t kDefaultTruncationCap = 100000;

/// Smallest N for which both the tail mass sum_{n>N} |C_n|^2 and the weighted
/// tail sum_{n>N} (n+1)^2 |C_n|^2 are below eps, holding for ten consecutive
/// candidates. Throws ConvergenceError when N would exceed cap.
std::size_t truncation_order(const FieldParams& params, double eps = kDefaultTailEps,
                             std::size_t cap = kDefaultTruncationCap);

/// Builds C_n = N_f alpha^n / (sqrt(n!) [f(n)]!) in the log domain, truncated at
/// truncation_order(params, eps) and renormalized to unit norm on the kept range.
CoefficientVector coefficients(const FieldParams& params, double eps = kDefaultTailEps,
                               std::size_t cap = kDefaultTruncationCap);

}  // namespace cascade
