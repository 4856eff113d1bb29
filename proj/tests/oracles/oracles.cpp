#include "oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

namespace oracle {

namespace {

using hp = boost::multiprecision::cpp_bin_float_50;
using hc = boost::multiprecision::cpp_complex_50;
using ld = long double;

const hp kHbar("1.054571817e-34");
const hp kBoltzmann("1.380649e-23");
const hp kLightSpeed("299792458");

template <std::size_t N>
std::array<hp, N> gauss_solve(std::array<std::array<hp, N + 1>, N> m) {
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < N; ++r) {
            if (abs(m[r][col]) > abs(m[piv][col])) {
                piv = r;
            }
        }
        std::swap(m[col], m[piv]);
        if (m[col][col] == 0) {
            throw std::runtime_error("oracle: singular system");
        }
        for (std::size_t r = col + 1; r < N; ++r) {
            const hp f = m[r][col] / m[col][col];
            for (std::size_t k = col; k <= N; ++k) {
                m[r][k] -= f * m[col][k];
            }
        }
    }
    std::array<hp, N> x{};
    for (std::size_t i = N; i-- > 0;) {
        hp s = m[i][N];
        for (std::size_t k = i + 1; k < N; ++k) {
            s -= m[i][k] * x[k];
        }
        x[i] = s / m[i][i];
    }
    return x;
}

using LdMat = std::vector<ld>;  // n*n row-major

LdMat to_ld(const Matrix& m) {
    LdMat out(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out[i * m.cols() + j] = m(i, j);
        }
    }
    return out;
}

LdMat mul(const LdMat& a, const LdMat& b, std::size_t n) {
    LdMat c(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const ld aik = a[i * n + k];
            for (std::size_t j = 0; j < n; ++j) {
                c[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    return c;
}

LdMat transpose(const LdMat& a, std::size_t n) {
    LdMat t(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            t[j * n + i] = a[i * n + j];
        }
    }
    return t;
}

// exp(A t) by Taylor series; callers keep |A t| of order one.
LdMat expm_taylor(const LdMat& a, std::size_t n, ld t) {
    LdMat result(n * n, 0.0L);
    LdMat term(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        result[i * n + i] = 1.0L;
        term[i * n + i] = 1.0L;
    }
    for (int k = 1; k < 60; ++k) {
        term = mul(term, a, n);
        ld biggest = 0.0L;
        for (auto& v : term) {
            v *= t / k;
            biggest = std::max(biggest, std::fabs(v));
        }
        for (std::size_t i = 0; i < n * n; ++i) {
            result[i] += term[i];
        }
        if (biggest < 1e-30L) {
            break;
        }
    }
    return result;
}

ld max_abs(const LdMat& m) {
    ld v = 0.0L;
    for (ld x : m) {
        v = std::max(v, std::fabs(x));
    }
    return v;
}

double det_small(const Matrix& m) {
    const std::size_t n = m.rows();
    LdMat a = to_ld(m);
    ld det = 1.0L;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::fabs(a[r * n + c]) > std::fabs(a[p * n + c])) {
                p = r;
            }
        }
        if (a[p * n + c] == 0.0L) {
            return 0.0;
        }
        if (p != c) {
            for (std::size_t k = 0; k < n; ++k) {
                std::swap(a[p * n + k], a[c * n + k]);
            }
            det = -det;
        }
        det *= a[c * n + c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const ld f = a[r * n + c] / a[c * n + c];
            for (std::size_t k = c; k < n; ++k) {
                a[r * n + k] -= f * a[c * n + k];
            }
        }
    }
    return static_cast<double>(det);
}

Matrix block(const Matrix& v, std::size_t r0, std::size_t c0) {
    Matrix b(2, 2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            b(i, j) = v(r0 + i, c0 + j);
        }
    }
    return b;
}

}  // namespace

double sagnac_rotation_for_shift(double n, double radius, double lambda, double dn_dlambda, double omega_c,
                                 double delta_f) {
    const hp nn(n);
    const hp factor = 1 - 1 / (nn * nn) - (hp(lambda) / nn) * hp(dn_dlambda);
    const hp omega = hp(delta_f) * kLightSpeed / (nn * hp(radius) * hp(omega_c) * factor);
    return static_cast<double>(omega);
}

double bose_einstein(double omega, double temperature) {
    if (temperature == 0.0) {
        return 0.0;
    }
    const hp x = kHbar * hp(omega) / (kBoltzmann * hp(temperature));
    return static_cast<double>(1 / (exp(x) - 1));
}

std::complex<double> lambda_coeff(const eoms::SystemParams& p) {
    const hc i(0, 1);
    const hc lam = -i * (hp(p.delta_c_eff) + hp(p.delta_f)) + hp(p.kappa_c) +
                   hp(p.coupling_j) * hp(p.coupling_j) / (-i * hp(p.delta_a) + hp(p.kappa_a));
    return {static_cast<double>(lam.real()), static_cast<double>(lam.imag())};
}

MeanField mean_field(const eoms::SystemParams& p) {
    const hp kc(p.kappa_c);
    const hp ka(p.kappa_a);
    const hp delta = hp(p.delta_c_eff) + hp(p.delta_f);
    const hp da(p.delta_a);
    const hp j(p.coupling_j);
    const hp g2 = 2 * hp(p.opa_gain);
    const hp cphi = cos(hp(p.opa_phase));
    const hp sphi = sin(hp(p.opa_phase));
    const hp eps(p.drive_eps);
    // unknowns (x, y, u, v) with c = x + iy, a = u + iv
    std::array<std::array<hp, 5>, 4> m{{
        {-kc + g2 * cphi, delta + g2 * sphi, hp(0), j, -eps},
        {-delta + g2 * sphi, -kc - g2 * cphi, -j, hp(0), hp(0)},
        {hp(0), j, -ka, da, hp(0)},
        {-j, hp(0), -da, -ka, hp(0)},
    }};
    const auto s = gauss_solve<4>(m);
    MeanField out;
    out.c = {static_cast<double>(s[0]), static_cast<double>(s[1])};
    out.a = {static_cast<double>(s[2]), static_cast<double>(s[3])};
    out.b = static_cast<double>(-hp(p.coupling_g) * (s[0] * s[0] + s[1] * s[1]) / hp(p.omega_b));
    return out;
}

Matrix drift_from_fluctuations(const eoms::SystemParams& p, std::complex<double> c_mean) {
    using cd = std::complex<double>;
    const cd i(0.0, 1.0);
    const double wb = p.omega_b;
    const cd gcb = i * p.coupling_g * c_mean / wb;
    // alpha[j][k], beta[j][k]: coefficient of o_k and o_k^dagger in d(o_j)/dt
    std::array<std::array<cd, 3>, 3> alpha{};
    std::array<std::array<cd, 3>, 3> beta{};
    alpha[0][0] = -(p.kappa_c + i * (p.delta_c_eff + p.delta_f)) / wb;
    beta[0][0] = 2.0 * p.opa_gain * std::exp(i * p.opa_phase) / wb;
    alpha[0][1] = -i * p.coupling_j / wb;
    alpha[0][2] = -gcb;
    beta[0][2] = -gcb;
    alpha[1][1] = -(p.kappa_a + i * p.delta_a) / wb;
    alpha[1][0] = -i * p.coupling_j / wb;
    alpha[2][2] = -(p.kappa_b + i * p.omega_b) / wb;
    alpha[2][0] = std::conj(gcb);
    beta[2][0] = -gcb;

    Matrix a(6, 6);
    for (std::size_t jm = 0; jm < 3; ++jm) {
        for (std::size_t k = 0; k < 3; ++k) {
            const cd s = alpha[jm][k] + beta[jm][k];
            const cd d = alpha[jm][k] - beta[jm][k];
            a(2 * jm, 2 * k) = s.real();
            a(2 * jm, 2 * k + 1) = -d.imag();
            a(2 * jm + 1, 2 * k) = s.imag();
            a(2 * jm + 1, 2 * k + 1) = d.real();
        }
    }
    return a;
}

Matrix lyapunov_quadrature(const Matrix& a, const Matrix& d) {
    static constexpr std::array<ld, 8> kNodes{
        -0.9602898564975362316835609L, -0.7966664774136267395915539L, -0.5255324099163289858177390L,
        -0.1834346424956498049394761L, 0.1834346424956498049394761L,  0.5255324099163289858177390L,
        0.7966664774136267395915539L,  0.9602898564975362316835609L};
    static constexpr std::array<ld, 8> kWeights{
        0.1012285362903762591525314L, 0.2223810344533744705443560L, 0.3137066458778872873379622L,
        0.3626837833783619829651504L, 0.3626837833783619829651504L, 0.3137066458778872873379622L,
        0.2223810344533744705443560L, 0.1012285362903762591525314L};
    const std::size_t n = a.rows();
    const LdMat al = to_ld(a);
    const LdMat dl = to_ld(d);
    const ld h = std::min<ld>(1.0L, 1.0L / std::max<ld>(max_abs(al), 1e-300L));
    // integral over one panel [0, h]; later panels are M0 P M0^T with M0 = exp(A s0)
    LdMat panel(n * n, 0.0L);
    for (std::size_t k = 0; k < 8; ++k) {
        const LdMat e = expm_taylor(al, n, h * (1.0L + kNodes[k]) / 2.0L);
        const LdMat contrib = mul(mul(e, dl, n), transpose(e, n), n);
        for (std::size_t q = 0; q < n * n; ++q) {
            panel[q] += kWeights[k] * h / 2.0L * contrib[q];
        }
    }
    const LdMat step = expm_taylor(al, n, h);

    LdMat v(n * n, 0.0L);
    LdMat m0(n * n, 0.0L);
    for (std::size_t i = 0; i < n; ++i) {
        m0[i * n + i] = 1.0L;
    }
    for (std::size_t p = 0; p < 100'000'000; ++p) {
        const LdMat contrib = mul(mul(m0, panel, n), transpose(m0, n), n);
        for (std::size_t q = 0; q < n * n; ++q) {
            v[q] += contrib[q];
        }
        m0 = mul(m0, step, n);
        if (max_abs(m0) < 1e-11L) {
            break;
        }
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = static_cast<double>(v[i * n + j]);
        }
    }
    return out;
}

Matrix lyapunov_ode(const Matrix& a, const Matrix& d, double tol) {
    const std::size_t n = a.rows();
    const LdMat al = to_ld(a);
    const LdMat at = transpose(al, n);
    const LdMat dl = to_ld(d);
    auto rhs = [&](const LdMat& v) {
        LdMat r = mul(al, v, n);
        const LdMat r2 = mul(v, at, n);
        for (std::size_t q = 0; q < n * n; ++q) {
            r[q] += r2[q] + dl[q];
        }
        return r;
    };
    const ld dt = 0.1L / std::max<ld>(max_abs(al) * n, 1e-300L);
    LdMat v(n * n, 0.0L);
    auto axpy = [n](const LdMat& x, ld s, const LdMat& y) {
        LdMat r(n * n);
        for (std::size_t q = 0; q < n * n; ++q) {
            r[q] = x[q] + s * y[q];
        }
        return r;
    };
    const ld dscale = std::max<ld>(max_abs(dl), 1e-300L);
    for (std::size_t step = 0; step < 200'000'000; ++step) {
        const LdMat k1 = rhs(v);
        if (max_abs(k1) < tol * dscale) {
            break;
        }
        const LdMat k2 = rhs(axpy(v, dt / 2, k1));
        const LdMat k3 = rhs(axpy(v, dt / 2, k2));
        const LdMat k4 = rhs(axpy(v, dt, k3));
        for (std::size_t q = 0; q < n * n; ++q) {
            v[q] += dt / 6 * (k1[q] + 2 * k2[q] + 2 * k3[q] + k4[q]);
        }
    }
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = static_cast<double>(v[i * n + j]);
        }
    }
    return out;
}

double nu_minus_two_mode(const Matrix& v4) {
    const double det_a = det_small(block(v4, 0, 0));
    const double det_b = det_small(block(v4, 2, 2));
    const double det_c = det_small(block(v4, 0, 2));
    const double det_v = det_small(v4);
    const double dt = det_a + det_b - 2.0 * det_c;
    const double disc = std::max(0.0, dt * dt - 4.0 * det_v);
    return std::sqrt(std::max(0.0, (dt - std::sqrt(disc)) / 2.0));
}

Matrix two_mode_squeezed(double r) {
    const double ch = std::cosh(2.0 * r) / 2.0;
    const double sh = std::sinh(2.0 * r) / 2.0;
    return Matrix{{ch, 0.0, sh, 0.0}, {0.0, ch, 0.0, -sh}, {sh, 0.0, ch, 0.0}, {0.0, -sh, 0.0, ch}};
}

Matrix companion_from_roots(const std::vector<std::complex<double>>& roots) {
    // coefficients of prod (x - r), highest power first, monic
    std::vector<std::complex<long double>> coeff{1.0L};
    for (const auto& r : roots) {
        std::vector<std::complex<long double>> next(coeff.size() + 1, 0.0L);
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k] += coeff[k];
            next[k + 1] -= coeff[k] * std::complex<long double>(r);
        }
        coeff = std::move(next);
    }
    const std::size_t n = roots.size();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        m(0, j) = static_cast<double>(-coeff[j + 1].real());
    }
    for (std::size_t i = 1; i < n; ++i) {
        m(i, i - 1) = 1.0;
    }
    return m;
}

}  // namespace oracle
