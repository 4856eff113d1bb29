#pragma once

#include "eoms/linalg.hpp"
#include "eoms/physical_model.hpp"
#include "eoms/steady_state.hpp"

#include <complex>
#include <vector>

namespace eoms {

/// Quadrature ordering (X_c, Y_c, X_a, Y_a, X_b, Y_b).
inline constexpr std::size_t kQuadratures = 6;

/// Drift matrix of the linearized fluctuation dynamics. Entries are stored in
/// units of rate_unit (omega_b), which keeps them O(1e-4 .. 1) instead of
/// O(1e5 .. 1e10) rad/s; physical entries are a(i, j) * rate_unit.
struct DriftMatrix {
    linalg::Matrix a;
    double rate_unit = 1.0;

    [[nodiscard]] double rad_per_s(std::size_t i, std::size_t j) const { return a(i, j) * rate_unit; }
};

/// Diagonal diffusion matrix, same normalization as DriftMatrix.
struct DiffusionMatrix {
    linalg::Matrix d;
    double rate_unit = 1.0;

    [[nodiscard]] double rad_per_s(std::size_t i, std::size_t j) const { return d(i, j) * rate_unit; }
};

/// Symmetric steady-state correlation matrix, vacuum variance 1/2.
struct CovarianceMatrix {
    linalg::Matrix v;
};

struct StabilityReport {
    std::vector<std::complex<double>> eigenvalues;  ///< rad/s
    double spectral_abscissa = 0.0;                 ///< rad/s
    bool stable = false;
};

[[nodiscard]] DriftMatrix build_drift(const SystemParams& params, const SteadyState& state);

/// Diag[kappa_c(2N_c+1), kappa_c(2N_c+1), kappa_a(2N_a+1), ..., kappa_b(2N_b+1)].
[[nodiscard]] DiffusionMatrix build_diffusion(const SystemParams& params,
                                              const ThermalOccupations& occ);

/// Spectrum of the drift matrix; stable iff the spectral abscissa lies below
/// -1e-9 rate_unit. Propagates EigenFailure.
[[nodiscard]] StabilityReport stability(const DriftMatrix& drift);

/// Solves A V + V A^T = -D through the vectorized 36x36 system
/// (I (x) A + A (x) I) vec(V) = -vec(D), then symmetrizes. Throws Unstable if
/// the drift matrix is not Hurwitz and SingularSystem on a rank-deficient solve.
[[nodiscard]] CovarianceMatrix solve_lyapunov(const DriftMatrix& drift, const DiffusionMatrix& diffusion);

/// ||A V + V A^T + D||_F / ||D||_F, in the normalized units.
[[nodiscard]] double lyapunov_residual(const DriftMatrix& drift, const DiffusionMatrix& diffusion,
                                       const CovarianceMatrix& cov);

/// Symplectic eigenvalues: moduli of the eigenvalues of i Omega V, one per
/// mode, ascending. Omega is the direct sum of [[0, 1], [-1, 0]] blocks.
[[nodiscard]] std::vector<double> symplectic_eigenvalues(const linalg::Matrix& v);

/// True iff every symplectic eigenvalue is >= 1/2 - 1e-9 (uncertainty relation).
[[nodiscard]] bool physicality(const CovarianceMatrix& cov);

/// Direct sum of n copies of [[0, 1], [-1, 0]].
[[nodiscard]] linalg::Matrix symplectic_form(std::size_t modes);

}  // namespace eoms
