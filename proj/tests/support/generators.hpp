#pragma once

// Hand-rolled random generators for property tests. Every generator takes the
// engine by reference so a fixed seed reproduces a whole test run.

#include "eoms/linalg.hpp"
#include "eoms/physical_model.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace gen {

using eoms::linalg::Matrix;
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double lo = -1.0, double hi = 1.0) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m(i, j) = uniform(rng, lo, hi);
        }
    }
    return m;
}

/// A = S - K + E with S skew, K diagonal positive and E small enough that the
/// symmetric part stays negative definite; hence A is Hurwitz.
inline Matrix random_stable(Rng& rng, std::size_t n, double min_decay = 0.05, double max_decay = 1.0) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = -uniform(rng, min_decay, max_decay);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double w = uniform(rng, -2.0, 2.0);
            a(i, j) = w;
            a(j, i) = -w;
        }
    }
    const double perturb = 0.5 * min_decay / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) += uniform(rng, -perturb, perturb);
        }
    }
    return a;
}

/// Symmetric positive definite: B B^T + floor * I.
inline Matrix random_spd(Rng& rng, std::size_t n, double floor = 0.1) {
    const Matrix b = random_matrix(rng, n, n);
    Matrix d = b * b.transposed();
    for (std::size_t i = 0; i < n; ++i) {
        d(i, i) += floor;
    }
    return d;
}

/// Symplectic building blocks in (x1, p1, x2, p2, ...) ordering.
inline Matrix local_rotation(std::size_t modes, std::size_t k, double theta) {
    Matrix s = Matrix::identity(2 * modes);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    s(2 * k, 2 * k) = c;
    s(2 * k, 2 * k + 1) = sn;
    s(2 * k + 1, 2 * k) = -sn;
    s(2 * k + 1, 2 * k + 1) = c;
    return s;
}

inline Matrix local_squeezer(std::size_t modes, std::size_t k, double r) {
    Matrix s = Matrix::identity(2 * modes);
    s(2 * k, 2 * k) = std::exp(-r);
    s(2 * k + 1, 2 * k + 1) = std::exp(r);
    return s;
}

inline Matrix beam_splitter(std::size_t modes, std::size_t j, std::size_t k, double theta) {
    Matrix s = Matrix::identity(2 * modes);
    const double c = std::cos(theta);
    const double sn = std::sin(theta);
    for (std::size_t q = 0; q < 2; ++q) {
        s(2 * j + q, 2 * j + q) = c;
        s(2 * j + q, 2 * k + q) = sn;
        s(2 * k + q, 2 * j + q) = -sn;
        s(2 * k + q, 2 * k + q) = c;
    }
    return s;
}

/// Random symplectic matrix: alternating local rotations/squeezers and
/// beam splitters between every pair.
inline Matrix random_symplectic(Rng& rng, std::size_t modes, double max_squeeze = 0.8) {
    Matrix s = Matrix::identity(2 * modes);
    for (int layer = 0; layer < 2; ++layer) {
        for (std::size_t k = 0; k < modes; ++k) {
            s = local_rotation(modes, k, uniform(rng, 0.0, 2.0 * std::numbers::pi)) * s;
            s = local_squeezer(modes, k, uniform(rng, -max_squeeze, max_squeeze)) * s;
        }
        for (std::size_t j = 0; j < modes; ++j) {
            for (std::size_t k = j + 1; k < modes; ++k) {
                s = beam_splitter(modes, j, k, uniform(rng, 0.0, 2.0 * std::numbers::pi)) * s;
            }
        }
    }
    return s;
}

/// Physical covariance matrix S diag(nu) S^T with symplectic spectrum >= 1/2.
inline Matrix random_physical_cm(Rng& rng, std::size_t modes, double max_squeeze = 0.8) {
    Matrix w(2 * modes, 2 * modes);
    for (std::size_t k = 0; k < modes; ++k) {
        const double nu = 0.5 + uniform(rng, 0.0, 1.5);
        w(2 * k, 2 * k) = nu;
        w(2 * k + 1, 2 * k + 1) = nu;
    }
    const Matrix s = random_symplectic(rng, modes, max_squeeze);
    return s * w * s.transposed();
}

/// System parameters scattered around the reference set, in regimes where
/// the linearized dynamics is usually (not always) stable.
inline eoms::SystemParams random_system(Rng& rng) {
    eoms::SystemParams p = eoms::reference_params();
    const double wb = p.omega_b;
    p.delta_c_eff = uniform(rng, 0.5, 1.5) * wb;
    p.delta_a = uniform(rng, -2.0, 0.0) * wb;
    p.delta_f = uniform(rng, -0.2, 0.2) * wb;
    p.kappa_c = uniform(rng, 0.05, 0.6) * wb;
    p.kappa_a = uniform(rng, 0.05, 0.6) * wb;
    p.kappa_b = uniform(rng, 1e-5, 1e-3) * wb;
    p.coupling_j = uniform(rng, 0.0, 0.5) * wb;
    p.coupling_g = uniform(rng, 0.0, 1e-3) * wb;
    p.drive_eps = uniform(rng, 0.0, 200.0) * wb;
    p.opa_gain = uniform(rng, 0.0, 0.1) * wb;
    p.opa_phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
    p.temperature = uniform(rng, 0.0, 5.0);
    return p;
}

}  // namespace gen
