#include "eoms/entanglement.hpp"

#include "eoms/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eoms {

using linalg::Matrix;

std::string_view mode_name(Mode m) noexcept {
    switch (m) {
        case Mode::Cavity:
            return "cavity";
        case Mode::Exciton:
            return "exciton";
        case Mode::Phonon:
            return "phonon";
    }
    return "?";
}

constinit const ModePair ModePair::cavity_exciton{Mode::Cavity, Mode::Exciton};
constinit const ModePair ModePair::cavity_phonon{Mode::Cavity, Mode::Phonon};
constinit const ModePair ModePair::exciton_phonon{Mode::Exciton, Mode::Phonon};

Matrix reduce_two_mode(const CovarianceMatrix& cov, const ModePair& pair) {
    const std::size_t idx[4] = {x_index(pair.first()), x_index(pair.first()) + 1,
                                x_index(pair.second()), x_index(pair.second()) + 1};
    Matrix v4(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            v4(i, j) = cov.v(idx[i], idx[j]);
        }
    }
    return v4;
}

namespace {

// Partial transposition flips the sign of one momentum quadrature:
// V~ = P V P with P = diag(..., -1 at flipped_y, ...).
Negativity negativity_of_transpose(Matrix v, std::size_t flipped_y) {
    for (std::size_t k = 0; k < v.rows(); ++k) {
        if (k != flipped_y) {
            v(flipped_y, k) = -v(flipped_y, k);
            v(k, flipped_y) = -v(k, flipped_y);
        }
    }
    const std::size_t modes = v.rows() / 2;
    // nu_minus = min |eig(i Omega V~)| = min |eig(Omega V~)|
    const auto spectrum = linalg::eig_general(symplectic_form(modes) * v);
    Negativity n;
    n.nu_minus = spectrum.min_modulus();
    n.value = std::max(0.0, -std::log(2.0 * n.nu_minus));
    return n;
}

}  // namespace

Negativity log_negativity_4x4(const Matrix& v4) {
    if (v4.rows() != 4 || v4.cols() != 4) {
        throw std::invalid_argument("log_negativity_4x4: expected a 4x4 matrix");
    }
    return negativity_of_transpose(v4, 1);
}

Negativity log_negativity(const CovarianceMatrix& cov, const ModePair& pair) {
    return log_negativity_4x4(reduce_two_mode(cov, pair));
}

Negativity log_negativity_one_vs_two(const CovarianceMatrix& cov, Mode single) {
    return negativity_of_transpose(cov.v, x_index(single) + 1);
}

std::array<double, 3> residual_contangles(const CovarianceMatrix& cov) {
    const double ca = log_negativity(cov, ModePair::cavity_exciton).value;
    const double cb = log_negativity(cov, ModePair::cavity_phonon).value;
    const double ab = log_negativity(cov, ModePair::exciton_phonon).value;
    const double c_ab = log_negativity_one_vs_two(cov, Mode::Cavity).value;
    const double a_cb = log_negativity_one_vs_two(cov, Mode::Exciton).value;
    const double b_ca = log_negativity_one_vs_two(cov, Mode::Phonon).value;
    return {
        c_ab * c_ab - ca * ca - cb * cb,
        a_cb * a_cb - ca * ca - ab * ab,
        b_ca * b_ca - cb * cb - ab * ab,
    };
}

double min_residual_contangle(const std::array<double, 3>& residuals) {
    double best = residuals[0];
    for (std::size_t i = 0; i < residuals.size(); ++i) {
        double r = residuals[i];
        if (r < -1e-6) {
            throw MonogamyViolation("residual contangle of the " +
                                    std::string(mode_name(static_cast<Mode>(i))) +
                                    " bipartition is " + std::to_string(r));
        }
        if (r < 0.0 && r >= -1e-9) {
            r = 0.0;
        }
        best = i == 0 ? r : std::min(best, r);
    }
    return best;
}

double min_residual_contangle(const CovarianceMatrix& cov) {
    return min_residual_contangle(residual_contangles(cov));
}

double contrast_ratio(double e_plus, double e_minus) noexcept {
    if (e_plus < 1e-12 && e_minus < 1e-12) {
        return 0.0;
    }
    return std::abs(e_plus - e_minus) / (e_plus + e_minus);
}

EntanglementReport analyze(const CovarianceMatrix& cov) {
    EntanglementReport r;
    r.e_ca = log_negativity(cov, ModePair::cavity_exciton);
    r.e_cb = log_negativity(cov, ModePair::cavity_phonon);
    r.e_ab = log_negativity(cov, ModePair::exciton_phonon);
    r.e_c_ab = log_negativity_one_vs_two(cov, Mode::Cavity);
    r.e_a_cb = log_negativity_one_vs_two(cov, Mode::Exciton);
    r.e_b_ca = log_negativity_one_vs_two(cov, Mode::Phonon);
    const auto sq = [](double x) { return x * x; };
    r.residuals = {
        sq(r.e_c_ab.value) - sq(r.e_ca.value) - sq(r.e_cb.value),
        sq(r.e_a_cb.value) - sq(r.e_ca.value) - sq(r.e_ab.value),
        sq(r.e_b_ca.value) - sq(r.e_cb.value) - sq(r.e_ab.value),
    };
    try {
        r.r_tau_min = min_residual_contangle(r.residuals);
    } catch (const MonogamyViolation&) {
        r.r_tau_min.reset();
    }
    return r;
}

}  // namespace eoms
