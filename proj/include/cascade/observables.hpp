#pragma once

#include "cascade/coherent_state.hpp"
#include "cascade/dynamics.hpp"

#include <optional>

namespace cascade {

// Closed-form field and atomic observables of the resonant cascade model.
// Each function sums over the retained Fock range of `coeffs`; none of them
// go through EvolvedState.

double mean_photon_number(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

/// <S_z> = P(e2) - P(g).
double atomic_inversion(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

double mean_photon_number_squared(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

/// Mandel Q = (<n^2> - <n>^2) / <n> - 1; empty when <n> = 0.
std::optional<double> mandel_q(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

/// Phase-stripped <a>: <a> = exp(-i(omega t - phi)) B1. Throws RealityViolation
/// if the sum has a non-negligible imaginary part.
double b1(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

/// Phase-stripped <a^2>: <a^2> = exp(-2i(omega t - phi)) B2.
double b2(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

struct Squeezing {
    double s1 = 0.0;
    double s2 = 0.0;
};

/// S_j = 4 <(Delta X_j)^2> - 1 for the quadratures of A = a exp(i omega t),
/// with phi the coherent-state phase. S_j < 0 means squeezing in X_j.
Squeezing squeezing(const CoefficientVector& coeffs, const CouplingParams& coupling, double phi, double tau);

struct ObservableSample {
    double tau = 0.0;
    double mean_n = 0.0;
    double s_z = 0.0;
    std::optional<double> mandel_q;
    double s1 = 0.0;
    double s2 = 0.0;
    /// ||Psi(tau)||^2 - 1 of the evolved state.
    double norm_residual = 0.0;
};

ObservableSample sample(const CoefficientVector& coeffs, const CouplingParams& coupling, double phi, double tau);

}  // namespace cascade
