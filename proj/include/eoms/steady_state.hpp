#pragma once

#include "eoms/physical_model.hpp"

#include <complex>

namespace eoms {

/// Classical mean amplitudes about which the quantum fluctuations are linearized.
struct SteadyState {
    std::complex<double> c_mean;        ///< cavity amplitude
    std::complex<double> a_mean;        ///< exciton amplitude
    double b_mean = 0.0;                ///< phonon amplitude, real
    std::complex<double> g_cb;          ///< effective optomechanical coupling i g <c>, rad/s
    std::complex<double> lambda_coeff;  ///< rad/s
};

/// Lambda = -i (Delta_c_eff + Delta_F) + kappa_c + J^2 / (-i Delta_a + kappa_a).
[[nodiscard]] std::complex<double> lambda_coeff(const SystemParams& params);

/// Closed-form mean amplitudes:
///   <c> = eps (2 G e^{i phi} + Lambda) / (|Lambda|^2 - 4 G^2)
///   <a> = -i J <c> / (i Delta_a + kappa_a)
///   <b> = -(g / omega_b) |<c>|^2
/// Throws ParametricSingularity when ||Lambda|^2 - 4 G^2| < 1e-12 |Lambda|^2.
[[nodiscard]] SteadyState solve_steady_state(const SystemParams& params);

/// Residuals of the time-independent mean-field equations for the cavity
/// and exciton amplitudes, evaluated at the given state (rad/s units).
struct MeanFieldResidual {
    std::complex<double> cavity;
    std::complex<double> exciton;
};

[[nodiscard]] MeanFieldResidual mean_field_residual(const SystemParams& params,
                                                    const SteadyState& state);

struct SelfConsistentResult {
    double delta_c_eff = 0.0;  ///< converged effective detuning, rad/s
    SteadyState state;
    int iterations = 0;
};

/// Bare-detuning route: finds the fixed point of
///   Delta_c_eff -> Delta_c + 2 g <b>(Delta_c_eff)
/// by damped iteration (factor 0.5) starting at Delta_c_eff = Delta_c.
/// params.delta_c_eff is ignored. Converged when successive iterates differ by
/// less than 1e-12 omega_b; throws NoConvergence after 10^4 iterations.
[[nodiscard]] SelfConsistentResult self_consistent_steady_state(const SystemParams& params,
                                                                double bare_delta_c);

}  // namespace eoms
