#include "cascade/dynamics.hpp"

#include "cascade/errors.hpp"

#include <cmath>
#include <string>

namespace cascade {

namespace {

double branch_sum(const std::vector<complex>& amps) {
    double sum = 0.0;
    for (const auto& a : amps) {
        sum += std::norm(a);
    }
    return sum;
}

}  // namespace

void validate(const CouplingParams& coupling) {
    if (!std::isfinite(coupling.beta) || coupling.beta < 0.0) {
        throw InvalidSpec("beta must be finite and non-negative, got " + std::to_string(coupling.beta));
    }
}

double rabi_frequency(const CouplingParams& coupling, unsigned n) {
    double upper = 0.0;
    if (n > 0) {
        const double gn = coupling.g.eval(n);
        upper = n * gn * gn;
    }
    const double gn1 = coupling.g.eval(n + 1);
    const double lower = coupling.beta * coupling.beta * (n + 1.0) * gn1 * gn1;
    return std::sqrt(upper + lower);
}

double rabi_sinc(double omega, double tau) {
    if (omega == 0.0) {
        return tau;
    }
    return std::sin(omega * tau) / omega;
}

double EvolvedState::norm_squared() const { return prob_e1() + prob_g() + prob_e2(); }
double EvolvedState::prob_e1() const { return branch_sum(e1); }
double EvolvedState::prob_g() const { return branch_sum(g); }
double EvolvedState::prob_e2() const { return branch_sum(e2); }

double EvolvedState::mean_photon_number() const {
    double sum = 0.0;
    for (std::size_t n = 0; n < e1.size(); ++n) {
        const double photons = static_cast<double>(n);
        sum += photons * std::norm(e1[n]) + (photons + 1.0) * std::norm(g[n]);
        if (n > 0) {
            sum += (photons - 1.0) * std::norm(e2[n]);
        }
    }
    return sum;
}

EvolvedState evolve(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau) {
    validate(coupling);
    const std::size_t size = coeffs.size();
    EvolvedState state;
    state.tau = tau;
    state.e1.resize(size);
    state.g.resize(size);
    state.e2.resize(size);

    const complex minus_i(0.0, -1.0);
    for (std::size_t n = 0; n < size; ++n) {
        const auto un = static_cast<unsigned>(n);
        const double omega = rabi_frequency(coupling, un);
        const double sinc = rabi_sinc(omega, tau);
        const complex c = coeffs.coeffs[n];

        state.e1[n] = c * std::cos(omega * tau);
        const double to_ground = coupling.beta * std::sqrt(n + 1.0) * coupling.g.eval(un + 1);
        state.g[n] = minus_i * c * (to_ground * sinc);
        if (n > 0) {
            const double to_upper = std::sqrt(static_cast<double>(n)) * coupling.g.eval(un);
            state.e2[n] = minus_i * c * (to_upper * sinc);
        }
    }
    return state;
}

}  // namespace cascade
