#include "cascade/oracle.hpp"

#include "cascade/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace cascade::oracle {

namespace {

/// Basis indices of the triplet with excitation number n, in the order (e2,n-1), (e1,n), (g,n+1).
std::vector<std::size_t> triplet_indices(std::size_t n, std::size_t photon_cutoff) {
    std::vector<std::size_t> idx;
    if (n >= 1) {
        idx.push_back(basis_index(Level::Excited2, n - 1));
    }
    idx.push_back(basis_index(Level::Excited1, n));
    if (n + 1 <= photon_cutoff) {
        idx.push_back(basis_index(Level::Ground, n + 1));
    }
    return idx;
}

Eigen::MatrixXd extract_block(const Eigen::SparseMatrix<double>& h, const std::vector<std::size_t>& idx) {
    const auto size = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd block(size, size);
    for (Eigen::Index i = 0; i < size; ++i) {
        for (Eigen::Index j = 0; j < size; ++j) {
            block(i, j) = h.coeff(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
        }
    }
    return block;
}

std::size_t photon_cutoff_of(const Eigen::SparseMatrix<double>& h) {
    return static_cast<std::size_t>(h.rows()) / 3 - 1;
}

void propagate_blocks(const Eigen::SparseMatrix<double>& h, std::size_t occupied, double tau, Eigen::VectorXcd& psi) {
    const std::size_t cutoff = photon_cutoff_of(h);
    for (std::size_t n = 0; n <= occupied; ++n) {
        const auto idx = triplet_indices(n, cutoff);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(extract_block(h, idx));
        if (solver.info() != Eigen::Success) {
            throw ConvergenceError("eigen-solver failed on triplet n = " + std::to_string(n));
        }
        const auto& vecs = solver.eigenvectors();
        Eigen::VectorXcd local(static_cast<Eigen::Index>(idx.size()));
        for (std::size_t i = 0; i < idx.size(); ++i) {
            local[static_cast<Eigen::Index>(i)] = psi[static_cast<Eigen::Index>(idx[i])];
        }
        Eigen::VectorXcd modal = vecs.transpose().cast<complex>() * local;
        for (Eigen::Index k = 0; k < modal.size(); ++k) {
            modal[k] *= std::polar(1.0, -solver.eigenvalues()[k] * tau);
        }
        local = vecs.cast<complex>() * modal;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            psi[static_cast<Eigen::Index>(idx[i])] = local[static_cast<Eigen::Index>(i)];
        }
    }
}

void propagate_rk4(const Eigen::SparseMatrix<double>& h, double tau, Eigen::VectorXcd& psi) {
    if (tau == 0.0) {
        return;
    }
    // Gershgorin bound on the spectral radius; keep |lambda| dt <= 0.01.
    double radius = 0.0;
    for (Eigen::Index row = 0; row < h.outerSize(); ++row) {
        double sum = 0.0;
        for (Eigen::SparseMatrix<double>::InnerIterator it(h, row); it; ++it) {
            sum += std::abs(it.value());
        }
        radius = std::max(radius, sum);
    }
    const auto steps = static_cast<long>(std::ceil(std::abs(tau) * std::max(radius, 1.0) / 0.01));
    const double dt = tau / static_cast<double>(steps);
    const Eigen::SparseMatrix<complex> gen = (complex(0.0, -1.0) * h.cast<complex>()).eval();
    Eigen::VectorXcd k1, k2, k3, k4;
    for (long s = 0; s < steps; ++s) {
        k1 = gen * psi;
        k2 = gen * (psi + 0.5 * dt * k1);
        k3 = gen * (psi + 0.5 * dt * k2);
        k4 = gen * (psi + dt * k3);
        psi += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

}  // namespace

Eigen::SparseMatrix<double> build_hamiltonian(const CouplingParams& coupling, std::size_t photon_cutoff) {
    validate(coupling);
    const auto dim = static_cast<Eigen::Index>(basis_dimension(photon_cutoff));
    std::vector<Eigen::Triplet<double>> entries;
    auto couple = [&](std::size_t row, std::size_t col, double value) {
        if (value == 0.0) {
            return;
        }
        entries.emplace_back(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col), value);
        entries.emplace_back(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(row), value);
    };
    for (std::size_t n = 0; n <= photon_cutoff; ++n) {
        const auto un = static_cast<unsigned>(n);
        // lambda1 (R |e2><e1| + h.c.): |e1,n> -> |e2,n-1>
        if (n >= 1) {
            couple(basis_index(Level::Excited2, n - 1), basis_index(Level::Excited1, n),
                   std::sqrt(static_cast<double>(n)) * coupling.g.eval(un));
        }
        // lambda2 (R^dag |g><e1| + h.c.): |e1,n> -> |g,n+1>
        if (n + 1 <= photon_cutoff) {
            couple(basis_index(Level::Ground, n + 1), basis_index(Level::Excited1, n),
                   coupling.beta * std::sqrt(n + 1.0) * coupling.g.eval(un + 1));
        }
    }
    Eigen::SparseMatrix<double> h(dim, dim);
    h.setFromTriplets(entries.begin(), entries.end());
    return h;
}

Eigen::VectorXd block_eigenvalues(const Eigen::SparseMatrix<double>& hamiltonian, std::size_t n) {
    const auto idx = triplet_indices(n, photon_cutoff_of(hamiltonian));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(extract_block(hamiltonian, idx),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("eigen-solver failed on triplet n = " + std::to_string(n));
    }
    return solver.eigenvalues();
}

double OracleState::triplet_probability(std::size_t n) const {
    double p = 0.0;
    for (auto i : triplet_indices(n, photon_cutoff)) {
        p += std::norm(amplitudes[static_cast<Eigen::Index>(i)]);
    }
    return p;
}

OracleState integrate(const CoefficientVector& initial, const CouplingParams& coupling, double tau, double omega0,
                      Method method) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw InvalidSpec("oracle integration requires finite tau >= 0");
    }
    OracleState state;
    state.tau = tau;
    state.omega0 = omega0;
    state.photon_cutoff = initial.n_max + 1;

    const auto h = build_hamiltonian(coupling, state.photon_cutoff);
    state.amplitudes = Eigen::VectorXcd::Zero(h.rows());
    for (std::size_t n = 0; n <= initial.n_max; ++n) {
        state.amplitudes[static_cast<Eigen::Index>(basis_index(Level::Excited1, n))] = initial.coeffs[n];
    }

    switch (method) {
    case Method::BlockDiagonalization:
        propagate_blocks(h, initial.n_max, tau, state.amplitudes);
        break;
    case Method::RungeKutta4:
        propagate_rk4(h, tau, state.amplitudes);
        break;
    }

    // U0 = exp(-i omega0 (S_z + n) tau) back to the Schroedinger picture.
    if (omega0 != 0.0) {
        for (std::size_t n = 0; n <= state.photon_cutoff; ++n) {
            for (Level level : {Level::Ground, Level::Excited1, Level::Excited2}) {
                const double quanta = inversion_of(level) + static_cast<double>(n);
                state.amplitudes[static_cast<Eigen::Index>(basis_index(level, n))] *=
                    std::polar(1.0, -omega0 * quanta * tau);
            }
        }
    }
    return state;
}

OracleObservables observables_from_state(const OracleState& state) {
    OracleObservables out;
    double norm = 0.0;
    double mean_n = 0.0;
    double mean_n2 = 0.0;
    double s_z = 0.0;
    complex a(0.0, 0.0);
    complex a2(0.0, 0.0);
    for (std::size_t n = 0; n <= state.photon_cutoff; ++n) {
        const double dn = static_cast<double>(n);
        for (Level level : {Level::Ground, Level::Excited1, Level::Excited2}) {
            const complex amp = state.amplitude(level, n);
            const double p = std::norm(amp);
            norm += p;
            mean_n += dn * p;
            mean_n2 += dn * dn * p;
            s_z += inversion_of(level) * p;
            // a|level,n+1> = sqrt(n+1)|level,n>
            if (n + 1 <= state.photon_cutoff) {
                a += std::conj(amp) * std::sqrt(dn + 1.0) * state.amplitude(level, n + 1);
            }
            if (n + 2 <= state.photon_cutoff) {
                a2 += std::conj(amp) * std::sqrt((dn + 1.0) * (dn + 2.0)) * state.amplitude(level, n + 2);
            }
        }
    }

    out.mean_n2 = mean_n2;
    out.a = a;
    out.a2 = a2;
    out.rotating_a = a * std::polar(1.0, state.omega0 * state.tau);
    out.rotating_a2 = a2 * std::polar(1.0, 2.0 * state.omega0 * state.tau);

    ObservableSample& s = out.sample;
    s.tau = state.tau;
    s.mean_n = mean_n;
    s.s_z = s_z;
    if (mean_n > 0.0) {
        s.mandel_q = (mean_n2 - mean_n * mean_n) / mean_n - 1.0;
    }
    // X1 = (A + A^dag)/2, X2 = (A - A^dag)/(2i), [A, A^dag] = 1.
    const complex big_a = out.rotating_a;
    const complex big_a2 = out.rotating_a2;
    s.s1 = 2.0 * big_a2.real() + 2.0 * mean_n - 4.0 * big_a.real() * big_a.real();
    s.s2 = -2.0 * big_a2.real() + 2.0 * mean_n - 4.0 * big_a.imag() * big_a.imag();
    s.norm_residual = norm - 1.0;
    return out;
}

}  // namespace cascade::oracle
