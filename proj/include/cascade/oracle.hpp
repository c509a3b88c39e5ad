#pragma once

#include "cascade/coherent_state.hpp"
#include "cascade/dynamics.hpp"
#include "cascade/observables.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <complex>
#include <cstddef>

namespace cascade::oracle {

// Brute-force reference: explicit Hamiltonian on the truncated atom x field
// basis, evolved without using the closed-form solution.

enum class Level : int { Ground = 0, Excited1 = 1, Excited2 = 2 };

/// Eigenvalue of S_z = |e2><e2| - |g><g| on a bare level.
constexpr int inversion_of(Level level) { return static_cast<int>(level) - 1; }

/// Position of |level, n> in the basis {|g,n>, |e1,n>, |e2,n>}_{n=0..photon_cutoff}.
constexpr std::size_t basis_index(Level level, std::size_t n) { return 3 * n + static_cast<std::size_t>(level); }

constexpr std::size_t basis_dimension(std::size_t photon_cutoff) { return 3 * (photon_cutoff + 1); }

/// Resonant interaction Hamiltonian (units of hbar lambda1) on photon numbers 0..photon_cutoff:
/// <e2,n-1|H|e1,n> = sqrt(n) g(n), <g,n+1|H|e1,n> = beta sqrt(n+1) g(n+1), plus transposes.
Eigen::SparseMatrix<double> build_hamiltonian(const CouplingParams& coupling, std::size_t photon_cutoff);

/// Numerical eigenvalues (ascending) of the H block acting on the triplet with excitation number n.
Eigen::VectorXd block_eigenvalues(const Eigen::SparseMatrix<double>& hamiltonian, std::size_t n);

enum class Method {
    /// Exact propagation by numerically diagonalizing each 3x3 triplet block.
    BlockDiagonalization,
    /// Fixed-step classical Runge-Kutta on the full sparse Hamiltonian.
    RungeKutta4,
};

struct OracleState {
    Eigen::VectorXcd amplitudes;
    double tau = 0.0;
    double omega0 = 0.0;
    std::size_t photon_cutoff = 0;

    complex amplitude(Level level, std::size_t n) const { return amplitudes[basis_index(level, n)]; }
    double norm_squared() const { return amplitudes.squaredNorm(); }
    /// Probability in the triplet {|e2,n-1>, |e1,n>, |g,n+1>}.
    double triplet_probability(std::size_t n) const;
};

/// Evolves |e1> (x) sum_n C_n |n> for scaled time tau, then applies the free
/// evolution exp(-i omega0 (S_z + n) tau) of the Schroedinger picture.
/// The basis extends one photon beyond coeffs.n_max.
OracleState integrate(const CoefficientVector& initial, const CouplingParams& coupling, double tau,
                      double omega0 = 0.0, Method method = Method::BlockDiagonalization);

struct OracleObservables {
    ObservableSample sample;
    double mean_n2 = 0.0;
    /// <a> and <a^2> in the Schroedinger picture.
    complex a;
    complex a2;
    /// <A> and <A^2> for A = a exp(i omega0 tau).
    complex rotating_a;
    complex rotating_a2;
};

/// Direct expectation values from the amplitudes; Q and S_j follow from their definitions.
OracleObservables observables_from_state(const OracleState& state);

}  // namespace cascade::oracle
