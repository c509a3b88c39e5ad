#pragma once

#include "cascade/coherent_state.hpp"
#include "cascade/nonlinearity.hpp"

#include <complex>
#include <vector>

namespace cascade {

/// Intensity-dependent coupling g(n) and the dipole ratio beta = lambda2 / lambda1.
/// beta = 0 is the two-level limit; beta = 1 the equal-dipole case.
struct CouplingParams {
    NonlinearitySpec g;
    double beta = 0.0;
};

void validate(const CouplingParams& coupling);

/// Generalized Rabi frequency of the triplet {|e2,n-1>, |e1,n>, |g,n+1>}:
/// sqrt(n g(n)^2 + beta^2 (n+1) g(n+1)^2). The n g(n)^2 term is exactly zero at n = 0.
double rabi_frequency(const CouplingParams& coupling, unsigned n);

/// sin(omega tau) / omega, with the limit value tau at omega = 0.
double rabi_sinc(double omega, double tau);

/// Amplitudes of the resonant solution at scaled time tau (free phase dropped).
///
/// Index n labels the excitation triplet: e1[n] is on |e1,n>, g[n] on |g,n+1>,
/// e2[n] on |e2,n-1>. e2[0] is always zero (there is no |e2,-1>).
struct EvolvedState {
    std::vector<complex> e1;
    std::vector<complex> g;
    std::vector<complex> e2;
    double tau = 0.0;

    double norm_squared() const;
    double prob_e1() const;
    double prob_g() const;
    double prob_e2() const;
    /// <n> from branch bookkeeping: |e1,n> has n photons, |g,n+1> one more, |e2,n-1> one fewer.
    double mean_photon_number() const;
    /// P(e2) - P(g).
    double inversion() const { return prob_e2() - prob_g(); }
};

EvolvedState evolve(const CoefficientVector& coeffs, const CouplingParams& coupling, double tau);

}  // namespace cascade
