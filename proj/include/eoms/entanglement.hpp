#pragma once

#include "eoms/gaussian_dynamics.hpp"
#include "eoms/linalg.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string_view>

namespace eoms {

enum class Mode { Cavity = 0, Exciton = 1, Phonon = 2 };

[[nodiscard]] std::string_view mode_name(Mode m) noexcept;
/// Index of the X quadrature of a mode; Y follows it.
[[nodiscard]] constexpr std::size_t x_index(Mode m) noexcept { return 2 * static_cast<std::size_t>(m); }

/// Two distinct modes. The first mode is the one partially transposed.
class ModePair {
public:
    /// Throws std::invalid_argument when first == second. Constexpr so the
    /// named pairs below are constant-initialized.
    constexpr ModePair(Mode first, Mode second) : first_(first), second_(second) {
        if (first == second) {
            throw std::invalid_argument("ModePair: modes must differ");
        }
    }

    [[nodiscard]] Mode first() const noexcept { return first_; }
    [[nodiscard]] Mode second() const noexcept { return second_; }

    static const ModePair cavity_exciton;
    static const ModePair cavity_phonon;
    static const ModePair exciton_phonon;

private:
    Mode first_;
    Mode second_;
};

struct Negativity {
    double value = 0.0;     ///< max(0, -ln(2 nu_minus))
    double nu_minus = 0.0;  ///< smallest symplectic eigenvalue of the partial transpose
};

/// 4x4 principal submatrix ordered (X_first, Y_first, X_second, Y_second).
[[nodiscard]] linalg::Matrix reduce_two_mode(const CovarianceMatrix& cov, const ModePair& pair);

/// Logarithmic negativity between two modes. The partial transpose flips the
/// Y quadrature of pair.first().
[[nodiscard]] Negativity log_negativity(const CovarianceMatrix& cov, const ModePair& pair);

/// Same measure on an already reduced 4x4 matrix.
[[nodiscard]] Negativity log_negativity_4x4(const linalg::Matrix& v4);

/// Logarithmic negativity of one mode against the remaining two.
[[nodiscard]] Negativity log_negativity_one_vs_two(const CovarianceMatrix& cov, Mode single);

/// Raw residual contangles R_i = E^2_{i|jk} - E^2_{i|j} - E^2_{i|k}, indexed
/// by Mode. No clamping.
[[nodiscard]] std::array<double, 3> residual_contangles(const CovarianceMatrix& cov);

/// Minimum over the three residual contangles. Values in [-1e-9, 0) are
/// clamped to 0; throws MonogamyViolation when any residual is below -1e-6.
[[nodiscard]] double min_residual_contangle(const CovarianceMatrix& cov);
[[nodiscard]] double min_residual_contangle(const std::array<double, 3>& residuals);

/// |e_plus - e_minus| / (e_plus + e_minus), 0 when both are below 1e-12.
[[nodiscard]] double contrast_ratio(double e_plus, double e_minus) noexcept;

struct EntanglementReport {
    Negativity e_ca;
    Negativity e_cb;
    Negativity e_ab;
    Negativity e_c_ab;  ///< cavity vs (exciton, phonon)
    Negativity e_a_cb;
    Negativity e_b_ca;
    std::array<double, 3> residuals{};  ///< raw residual contangles
    /// Absent when the residuals fail the monogamy check.
    std::optional<double> r_tau_min;
};

[[nodiscard]] EntanglementReport analyze(const CovarianceMatrix& cov);

}  // namespace eoms
