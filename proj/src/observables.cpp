#include "cascade/observables.hpp"

#include "cascade/errors.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace cascade {

namespace {

/// g(n) for n = 1..n_max+1 and Omega_n for n = 0..n_max, evaluated once per call.
struct RabiTable {
    std::vector<double> g;      // g[0] is unused and left at zero
    std::vector<double> omega;
    std::vector<double> cosine;
    std::vector<double> sinc;   // sin(Omega tau) / Omega

    RabiTable(const CouplingParams& coupling, std::size_t n_max, double tau)
        : g(n_max + 2, 0.0), omega(n_max + 1), cosine(n_max + 1), sinc(n_max + 1) {
        validate(coupling);
        for (std::size_t n = 1; n <= n_max + 1; ++n) {
            g[n] = coupling.g.eval(static_cast<unsigned>(n));
        }
        const double beta_sq = coupling.beta * coupling.beta;
        for (std::size_t n = 0; n <= n_max; ++n) {
            const double upper = n == 0 ? 0.0 : n * g[n] * g[n];
            omega[n] = std::sqrt(upper + beta_sq * (n + 1.0) * g[n + 1] * g[n + 1]);
            cosine[n] = std::cos(omega[n] * tau);
            sinc[n] = rabi_sinc(omega[n], tau);
        }
    }
};

double checked_real(complex value, const char* what) {
    if (std::abs(value.imag()) >= 1e-10 * (1.0 + std::abs(value.real()))) {
        std::ostringstream msg;
        msg.precision(17);
        msg << what << " has imaginary part " << value.imag() << " (real part " << value.real() << ")";
        throw RealityViolation(msg.str());
    }
    return value.real();
}

}  // namespace

double mean_photon_number(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    const RabiTable t(coupling, coeffs.n_max, tau);
    const double beta_sq = coupling.beta * coupling.beta;
    double sum = 0.0;
    for (std::size_t n = 0; n <= coeffs.n_max; ++n) {
        const double dn = static_cast<double>(n);
        const double emitted = dn * (dn - 1.0) * t.g[n] * t.g[n] + beta_sq * (dn + 1.0) * (dn + 1.0) * t.g[n + 1] * t.g[n + 1];
        sum += coeffs.probability(n) *
               (dn * t.cosine[n] * t.cosine[n] + t.sinc[n] * t.sinc[n] * emitted);
    }
    return sum;
}

double atomic_inversion(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    const RabiTable t(coupling, coeffs.n_max, tau);
    const double beta_sq = coupling.beta * coupling.beta;
    double sum = 0.0;
    for (std::size_t n = 0; n <= coeffs.n_max; ++n) {
        const double dn = static_cast<double>(n);
        const double weight = dn * t.g[n] * t.g[n] - beta_sq * (dn + 1.0) * t.g[n + 1] * t.g[n + 1];
        sum += coeffs.probability(n) * t.sinc[n] * t.sinc[n] * weight;
    }
    return sum;
}

double mean_photon_number_squared(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    const RabiTable t(coupling, coeffs.n_max, tau);
    const double beta_sq = coupling.beta * coupling.beta;
    double sum = 0.0;
    for (std::size_t n = 0; n <= coeffs.n_max; ++n) {
        const double dn = static_cast<double>(n);
        const double up = dn + 1.0;
        const double emitted =
            dn * (dn - 1.0) * (dn - 1.0) * t.g[n] * t.g[n] + beta_sq * up * up * up * t.g[n + 1] * t.g[n + 1];
        sum += coeffs.probability(n) *
               (dn * dn * t.cosine[n] * t.cosine[n] + t.sinc[n] * t.sinc[n] * emitted);
    }
    return sum;
}

std::optional<double> mandel_q(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    const double mean = mean_photon_number(coeffs, coupling, tau);
    if (mean <= 0.0) {
        return std::nullopt;
    }
    const double second = mean_photon_number_squared(coeffs, coupling, tau);
    return (second - mean * mean) / mean - 1.0;
}

double b1(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    if (coeffs.n_max == 0) {
        return 0.0;
    }
    const RabiTable t(coupling, coeffs.n_max, tau);
    const double beta_sq = coupling.beta * coupling.beta;
    complex sum(0.0, 0.0);
    for (std::size_t n = 0; n + 1 <= coeffs.n_max; ++n) {
        const double dn = static_cast<double>(n);
        const double root = std::sqrt(dn + 1.0);
        const double coupled = root * t.g[n + 1] * (dn * t.g[n] + beta_sq * (dn + 2.0) * t.g[n + 2]);
        const double bracket = root * t.cosine[n] * t.cosine[n + 1] + t.sinc[n] * t.sinc[n + 1] * coupled;
        sum += std::conj(coeffs.coeffs[n]) * coeffs.coeffs[n + 1] * bracket;
    }
    sum *= std::polar(1.0, -coeffs.phase);
    return checked_real(sum, "B1");
}

double b2(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    if (coeffs.n_max < 2) {
        return 0.0;
    }
    const RabiTable t(coupling, coeffs.n_max, tau);
    const double beta_sq = coupling.beta * coupling.beta;
    complex sum(0.0, 0.0);
    for (std::size_t n = 0; n + 2 <= coeffs.n_max; ++n) {
        const double dn = static_cast<double>(n);
        const double roots = std::sqrt(dn + 1.0) * std::sqrt(dn + 2.0);
        // g(n+3) reaches g(n_max+1), the last entry of the table
        const double coupled = dn * t.g[n] * t.g[n + 2] + beta_sq * (dn + 3.0) * t.g[n + 1] * t.g[n + 3];
        const double bracket = t.cosine[n] * t.cosine[n + 2] + t.sinc[n] * t.sinc[n + 2] * coupled;
        sum += std::conj(coeffs.coeffs[n]) * coeffs.coeffs[n + 2] * (roots * bracket);
    }
    sum *= std::polar(1.0, -2.0 * coeffs.phase);
    return checked_real(sum, "B2");
}

Squeezing squeezing(const CoefficientVector& coeffs, const CouplingParams& coupling, double phi, double tau) {
    const double b0 = mean_photon_number(coeffs, coupling, tau);
    const double first = b1(coeffs, coupling, tau);
    const double second = b2(coeffs, coupling, tau);
    const double cos_sq = std::cos(phi) * std::cos(phi);
    const double sin_sq = std::sin(phi) * std::sin(phi);
    const double spread = second - first * first;
    return {2.0 * (b0 - second) + 4.0 * cos_sq * spread, 2.0 * (b0 - second) + 4.0 * sin_sq * spread};
}

ObservableSample sample(const CoefficientVector& coeffs, const CouplingParams& coupling, double phi, double tau) {
    ObservableSample s;
    s.tau = tau;
    s.mean_n = mean_photon_number(coeffs, coupling, tau);
    s.s_z = atomic_inversion(coeffs, coupling, tau);
    if (s.mean_n > 0.0) {
        const double second = mean_photon_number_squared(coeffs, coupling, tau);
        s.mandel_q = (second - s.mean_n * s.mean_n) / s.mean_n - 1.0;
    }
    const Squeezing sq = squeezing(coeffs, coupling, phi, tau);
    s.s1 = sq.s1;
    s.s2 = sq.s2;
    s.norm_residual = evolve(coeffs, coupling, tau).norm_squared() - 1.0;
    return s;
}

}  // namespace cascade
