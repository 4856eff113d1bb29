#include "eoms/gaussian_dynamics.hpp"

#include "eoms/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eoms {

using linalg::Matrix;

DriftMatrix build_drift(const SystemParams& p, const SteadyState& s) {
    const double u = p.omega_b;
    const double sin_phi = std::sin(p.opa_phase);
    const double cos_phi = std::cos(p.opa_phase);
    const double cavity_detuning = p.delta_c_eff + p.delta_f;
    const double detuning_plus = (cavity_detuning + 2.0 * p.opa_gain * sin_phi) / u;
    const double detuning_minus = (cavity_detuning - 2.0 * p.opa_gain * sin_phi) / u;
    const double kappa_plus = (p.kappa_c + 2.0 * p.opa_gain * cos_phi) / u;
    const double kappa_minus = (p.kappa_c - 2.0 * p.opa_gain * cos_phi) / u;
    const double j = p.coupling_j / u;
    const double ka = p.kappa_a / u;
    const double da = p.delta_a / u;
    const double kb = p.kappa_b / u;
    const double wb = p.omega_b / u;
    const double re_g = s.g_cb.real() / u;
    const double im_g = s.g_cb.imag() / u;

    DriftMatrix drift;
    drift.rate_unit = u;
    drift.a = Matrix{
        {-kappa_minus, detuning_plus, 0.0, j, -2.0 * re_g, 0.0},
        {-detuning_minus, -kappa_plus, -j, 0.0, -2.0 * im_g, 0.0},
        {0.0, j, -ka, da, 0.0, 0.0},
        {-j, 0.0, -da, -ka, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, -kb, wb},
        {-2.0 * im_g, 2.0 * re_g, 0.0, 0.0, -wb, -kb},
    };
    return drift;
}

DiffusionMatrix build_diffusion(const SystemParams& p, const ThermalOccupations& occ) {
    const double u = p.omega_b;
    const double c = p.kappa_c * (2.0 * occ.n_c + 1.0) / u;
    const double a = p.kappa_a * (2.0 * occ.n_a + 1.0) / u;
    const double b = p.kappa_b * (2.0 * occ.n_b + 1.0) / u;
    const double diag[kQuadratures] = {c, c, a, a, b, b};
    return {Matrix::diagonal(diag), u};
}

StabilityReport stability(const DriftMatrix& drift) {
    const auto spectrum = linalg::eig_general(drift.a);
    StabilityReport report;
    report.eigenvalues.reserve(spectrum.values.size());
    for (const auto& z : spectrum.values) {
        report.eigenvalues.push_back(z * drift.rate_unit);
    }
    const double abscissa = spectrum.spectral_abscissa();
    report.spectral_abscissa = abscissa * drift.rate_unit;
    report.stable = abscissa < -1e-9;
    return report;
}

CovarianceMatrix solve_lyapunov(const DriftMatrix& drift, const DiffusionMatrix& diffusion) {
    const auto report = stability(drift);
    if (!report.stable) {
        throw Unstable("Lyapunov solve requested for an unstable drift matrix (spectral abscissa " +
                       std::to_string(report.spectral_abscissa / drift.rate_unit) + " omega_b)");
    }
    const std::size_t n = drift.a.rows();
    const Matrix eye = Matrix::identity(n);
    const Matrix system = linalg::kron(eye, drift.a) + linalg::kron(drift.a, eye);

    // column-major vec; D is symmetric so either ordering gives the same system
    std::vector<double> rhs(n * n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            rhs[col * n + row] = -diffusion.d(row, col);
        }
    }
    const auto x = linalg::lu_solve(system, rhs);

    CovarianceMatrix cov{Matrix(n, n)};
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < n; ++row) {
            cov.v(row, col) = x[col * n + row];
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = 0.5 * (cov.v(i, j) + cov.v(j, i));
            cov.v(i, j) = m;
            cov.v(j, i) = m;
        }
    }
    return cov;
}

double lyapunov_residual(const DriftMatrix& drift, const DiffusionMatrix& diffusion,
                         const CovarianceMatrix& cov) {
    const Matrix r = drift.a * cov.v + cov.v * drift.a.transposed() + diffusion.d;
    return r.frobenius_norm() / diffusion.d.frobenius_norm();
}

Matrix symplectic_form(std::size_t modes) {
    Matrix omega(2 * modes, 2 * modes);
    for (std::size_t k = 0; k < modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

std::vector<double> symplectic_eigenvalues(const Matrix& v) {
    const std::size_t modes = v.rows() / 2;
    // |eig(i Omega V)| = |eig(Omega V)|; eigenvalues come in +-i nu pairs
    const auto spectrum = linalg::eig_general(symplectic_form(modes) * v);
    std::vector<double> moduli;
    moduli.reserve(spectrum.values.size());
    for (const auto& z : spectrum.values) {
        moduli.push_back(std::abs(z));
    }
    std::sort(moduli.begin(), moduli.end());
    std::vector<double> nu;
    nu.reserve(modes);
    for (std::size_t k = 0; k < modes; ++k) {
        nu.push_back(0.5 * (moduli[2 * k] + moduli[2 * k + 1]));
    }
    return nu;
}

bool physicality(const CovarianceMatrix& cov) {
    const auto nu = symplectic_eigenvalues(cov.v);
    return std::all_of(nu.begin(), nu.end(), [](double x) { return x >= 0.5 - 1e-9; });
}

}  // namespace eoms
