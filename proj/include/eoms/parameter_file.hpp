#pragma once

#include "eoms/physical_model.hpp"

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eoms {

/// User-facing parameter set, mirroring the JSON parameter file. Frequencies
/// are ordinary frequencies in Hz (omega / 2 pi) or ratios to omega_b; the
/// conversion to angular units happens once, in resolve().
///
/// Keys:
///   omega_b_hz, omega_0_hz, delta_c_eff_over_omega_b, delta_a_over_omega_b,
///   delta_f_over_omega_b, kappa_c_hz, kappa_a_hz, kappa_b_hz, j_hz, g_hz,
///   eps_hz, opa_gain_over_omega_b, opa_phase_rad, temperature_k
/// plus an optional "rotation" object {n, radius_m, omega_rot_rad_s,
/// lambda_m, dn_dlambda}. With a rotation object the Sagnac shift is derived
/// from it and delta_f_over_omega_b must be absent.
struct ParameterFile {
    double omega_b_hz = 0.0;
    double omega_0_hz = 0.0;
    double delta_c_eff_over_omega_b = 0.0;
    double delta_a_over_omega_b = 0.0;
    double delta_f_over_omega_b = 0.0;
    double kappa_c_hz = 0.0;
    double kappa_a_hz = 0.0;
    double kappa_b_hz = 0.0;
    double j_hz = 0.0;
    double g_hz = 0.0;
    double eps_hz = 0.0;
    double opa_gain_over_omega_b = 0.0;
    double opa_phase_rad = 0.0;
    double temperature_k = 0.0;
    std::optional<RotationSpec> rotation;

    /// The reference operating point of reference_params() in file units.
    static ParameterFile reference();

    /// Throws InvalidInput on unknown keys, missing keys or non-numeric values.
    static ParameterFile from_json(const nlohmann::json& j);
    static ParameterFile load(const std::filesystem::path& path);

    [[nodiscard]] nlohmann::ordered_json to_json() const;

    /// Set a file key or one of the derived sweep keys
    /// (opa_gain_over_kappa_c, kappa_c_over_omega_b). Setting
    /// delta_f_over_omega_b drops any rotation object.
    void set(std::string_view key, double value);
    [[nodiscard]] double get(std::string_view key) const;

    /// Angular-unit parameters, phase reduced to [0, 2 pi). Throws
    /// InvalidInput listing every violated invariant.
    [[nodiscard]] SystemParams resolve() const;

    friend bool operator==(const ParameterFile&, const ParameterFile&) = default;
};

/// Every key accepted by ParameterFile::set.
[[nodiscard]] const std::vector<std::string>& settable_keys();

/// Keys a sweep axis may run over.
[[nodiscard]] const std::vector<std::string>& sweepable_keys();

}  // namespace eoms
