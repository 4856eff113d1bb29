#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace eoms {

namespace constants {
inline constexpr double hbar = 1.054571817e-34;        // J s
inline constexpr double boltzmann = 1.380649e-23;      // J / K
inline constexpr double speed_of_light = 299792458.0;  // m / s
inline constexpr double two_pi = 2.0 * std::numbers::pi;
}  // namespace constants

[[nodiscard]] constexpr double hz_to_angular(double hz) noexcept { return constants::two_pi * hz; }
[[nodiscard]] constexpr double angular_to_hz(double omega) noexcept {
    return omega / constants::two_pi;
}

/// Reduce a phase to [0, 2 pi).
[[nodiscard]] double reduce_phase(double phase) noexcept;

/// Physical parameters of the spinning exciton-optomechanical system.
///
/// Every frequency and rate is an angular quantity in rad/s. The cavity is
/// parametrized by the effective detuning (bare detuning plus the static
/// radiation-pressure shift); see self_consistent_steady_state() for the
/// bare-detuning route.
struct SystemParams {
    double omega_b = 0.0;      ///< mechanical resonance
    double omega_0 = 0.0;      ///< drive frequency
    double delta_c_eff = 0.0;  ///< effective cavity-drive detuning
    double delta_a = 0.0;      ///< exciton-drive detuning
    double delta_f = 0.0;      ///< Sagnac shift; > 0 for a drive entering from the left
    double kappa_c = 0.0;
    double kappa_a = 0.0;
    double kappa_b = 0.0;
    double coupling_j = 0.0;  ///< photon-exciton coupling
    double coupling_g = 0.0;  ///< single-photon optomechanical coupling
    double drive_eps = 0.0;
    double opa_gain = 0.0;
    double opa_phase = 0.0;    ///< radians, kept in [0, 2 pi)
    double temperature = 0.0;  ///< kelvin

    friend bool operator==(const SystemParams&, const SystemParams&) = default;
};

/// Resonator data entering the Sagnac-Fizeau shift.
struct RotationSpec {
    double refractive_index = 1.0;
    double radius = 0.0;            ///< m
    double angular_velocity = 0.0;  ///< rad/s, signed
    double wavelength = 0.0;        ///< m
    double dn_dlambda = 0.0;        ///< 1/m

    friend bool operator==(const RotationSpec&, const RotationSpec&) = default;
};

struct ThermalOccupations {
    double n_c = 0.0;
    double n_a = 0.0;
    double n_b = 0.0;
};

/// Reference operating point: omega_b/2pi = 1 GHz, omega_0/2pi = 345 THz,
/// kappa_c/2pi = kappa_a/2pi = 80 MHz, kappa_b/2pi = 100 kHz, J/2pi = 280 MHz,
/// g/2pi = 500 kHz, eps/2pi = 0.1 THz, T = 10 mK, with effective detuning
/// 0.9 omega_b, Delta_a = -omega_b, Delta_F = 0.1 omega_b and the OPA off.
[[nodiscard]] SystemParams reference_params();

/// Rotation-induced resonance shift
///   (n R Omega omega_c / c) (1 - 1/n^2 - (lambda/n) dn/dlambda).
[[nodiscard]] double sagnac_shift(const RotationSpec& rot, double omega_c);

/// Bose-Einstein occupation 1/(exp(hbar omega / k_B T) - 1); exactly 0 at T = 0.
/// Throws InvalidInput for omega <= 0 or T < 0.
[[nodiscard]] double thermal_occupation(double omega, double temperature);

/// Bath occupations. The mechanical mode uses omega_b; cavity and exciton use
/// their lab-frame resonances omega_0 + (Delta_c_eff + Delta_F) and
/// omega_0 + Delta_a.
[[nodiscard]] ThermalOccupations occupations(const SystemParams& params);

struct Violation {
    std::string field;
    std::string message;
};

/// Empty when every invariant of SystemParams holds.
[[nodiscard]] std::vector<Violation> validate(const SystemParams& params);
[[nodiscard]] std::vector<Violation> validate(const RotationSpec& rot);

}  // namespace eoms
