#include "eoms/steady_state.hpp"

#include "eoms/errors.hpp"

#include <cmath>
#include <string>

namespace eoms {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
}

std::complex<double> lambda_coeff(const SystemParams& p) {
    const std::complex<double> exciton_denominator{p.kappa_a, -p.delta_a};
    return -kI * (p.delta_c_eff + p.delta_f) + p.kappa_c +
           p.coupling_j * p.coupling_j / exciton_denominator;
}

SteadyState solve_steady_state(const SystemParams& p) {
    SteadyState s;
    s.lambda_coeff = lambda_coeff(p);
    const double lambda_sq = std::norm(s.lambda_coeff);
    const double denominator = lambda_sq - 4.0 * p.opa_gain * p.opa_gain;
    if (std::abs(denominator) < 1e-12 * lambda_sq) {
        throw ParametricSingularity("steady state: |Lambda|^2 - 4G^2 = " +
                                    std::to_string(denominator) +
                                    " vanishes relative to |Lambda|^2 (parametric threshold)");
    }
    const std::complex<double> opa = 2.0 * p.opa_gain * std::polar(1.0, p.opa_phase);
    s.c_mean = p.drive_eps * (opa + s.lambda_coeff) / denominator;
    s.a_mean = -kI * p.coupling_j / std::complex<double>(p.kappa_a, p.delta_a) * s.c_mean;
    s.b_mean = -(p.coupling_g / p.omega_b) * std::norm(s.c_mean);
    s.g_cb = kI * p.coupling_g * s.c_mean;
    return s;
}

MeanFieldResidual mean_field_residual(const SystemParams& p, const SteadyState& s) {
    // Time-independent mean-field equations with the optomechanical shift
    // absorbed into the effective detuning.
    MeanFieldResidual r;
    r.cavity = -(kI * (p.delta_c_eff + p.delta_f) + p.kappa_c) * s.c_mean -
               kI * p.coupling_j * s.a_mean +
               2.0 * p.opa_gain * std::polar(1.0, p.opa_phase) * std::conj(s.c_mean) +
               p.drive_eps;
    r.exciton = -(kI * p.delta_a + p.kappa_a) * s.a_mean - kI * p.coupling_j * s.c_mean;
    return r;
}

SelfConsistentResult self_consistent_steady_state(const SystemParams& params,
                                                  double bare_delta_c) {
    constexpr double damping = 0.5;
    constexpr int max_iterations = 10000;
    const double tolerance = 1e-12 * params.omega_b;

    SystemParams p = params;
    double current = bare_delta_c;
    for (int it = 1; it <= max_iterations; ++it) {
        p.delta_c_eff = current;
        const SteadyState s = solve_steady_state(p);
        const double mapped = bare_delta_c + 2.0 * p.coupling_g * s.b_mean;
        if (std::abs(mapped - current) < tolerance) {
            p.delta_c_eff = mapped;
            return {mapped, solve_steady_state(p), it};
        }
        current = (1.0 - damping) * current + damping * mapped;
    }
    throw NoConvergence("self-consistent detuning did not converge in " +
                        std::to_string(max_iterations) + " iterations (multistable regime?)");
}

}  // namespace eoms
