#include "eoms/physical_model.hpp"

#include "eoms/errors.hpp"

#include <cmath>

namespace eoms {

double reduce_phase(double phase) noexcept {
    double r = std::fmod(phase, constants::two_pi);
    if (r < 0.0) {
        r += constants::two_pi;
    }
    // fmod of a tiny negative value can round up to exactly 2 pi
    if (r >= constants::two_pi) {
        r = 0.0;
    }
    return r;
}

SystemParams reference_params() {
    SystemParams p;
    p.omega_b = hz_to_angular(1e9);
    p.omega_0 = hz_to_angular(345e12);
    p.delta_c_eff = 0.9 * p.omega_b;
    p.delta_a = -p.omega_b;
    p.delta_f = 0.1 * p.omega_b;
    p.kappa_c = hz_to_angular(80e6);
    p.kappa_a = hz_to_angular(80e6);
    p.kappa_b = hz_to_angular(100e3);
    p.coupling_j = hz_to_angular(280e6);
    p.coupling_g = hz_to_angular(500e3);
    p.drive_eps = hz_to_angular(0.1e12);
    p.opa_gain = 0.0;
    p.opa_phase = 0.0;
    p.temperature = 0.01;
    return p;
}

double sagnac_shift(const RotationSpec& rot, double omega_c) {
    const double n = rot.refractive_index;
    const double prefactor = n * rot.radius * rot.angular_velocity * omega_c / constants::speed_of_light;
    const double correction = 1.0 - 1.0 / (n * n) - (rot.wavelength / n) * rot.dn_dlambda;
    return prefactor * correction;
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) {
        throw InvalidInput("thermal_occupation: frequency must be positive");
    }
    if (!(temperature >= 0.0)) {
        throw InvalidInput("thermal_occupation: temperature must be non-negative");
    }
    if (temperature == 0.0) {
        return 0.0;
    }
    const double x = constants::hbar * omega / (constants::boltzmann * temperature);
    // expm1 overflows to +inf for x > ~709, giving an exact 0
    return 1.0 / std::expm1(x);
}

ThermalOccupations occupations(const SystemParams& params) {
    ThermalOccupations occ;
    occ.n_b = thermal_occupation(params.omega_b, params.temperature);
    occ.n_c = thermal_occupation(params.omega_0 + params.delta_c_eff + params.delta_f,
                                 params.temperature);
    occ.n_a = thermal_occupation(params.omega_0 + params.delta_a, params.temperature);
    return occ;
}

namespace {

void require(std::vector<Violation>& out, bool ok, const char* field, const char* message) {
    if (!ok) {
        out.push_back({field, message});
    }
}

}  // namespace

std::vector<Violation> validate(const SystemParams& p) {
    std::vector<Violation> out;
    const auto finite = [](double v) { return std::isfinite(v); };
    require(out, finite(p.omega_b) && p.omega_b > 0.0, "omega_b", "must be positive");
    require(out, finite(p.omega_0) && p.omega_0 > 0.0, "omega_0", "must be positive");
    require(out, finite(p.delta_c_eff), "delta_c_eff", "must be finite");
    require(out, finite(p.delta_a), "delta_a", "must be finite");
    require(out, finite(p.delta_f), "delta_f", "must be finite");
    require(out, finite(p.kappa_c) && p.kappa_c > 0.0, "kappa_c", "must be positive");
    require(out, finite(p.kappa_a) && p.kappa_a > 0.0, "kappa_a", "must be positive");
    require(out, finite(p.kappa_b) && p.kappa_b > 0.0, "kappa_b", "must be positive");
    require(out, finite(p.coupling_j), "coupling_j", "must be finite");
    require(out, finite(p.coupling_g), "coupling_g", "must be finite");
    require(out, finite(p.drive_eps) && p.drive_eps >= 0.0, "drive_eps", "must be non-negative");
    require(out, finite(p.opa_gain) && p.opa_gain >= 0.0, "opa_gain", "must be non-negative");
    require(out, finite(p.opa_phase) && p.opa_phase >= 0.0 && p.opa_phase < constants::two_pi,
            "opa_phase", "must lie in [0, 2 pi)");
    require(out, finite(p.temperature) && p.temperature >= 0.0, "temperature",
            "must be non-negative");
    if (finite(p.omega_0) && p.omega_0 > 0.0) {
        require(out, p.omega_0 + p.delta_c_eff + p.delta_f > 0.0, "delta_c_eff",
                "places the cavity resonance at a non-positive frequency");
        require(out, p.omega_0 + p.delta_a > 0.0, "delta_a",
                "places the exciton resonance at a non-positive frequency");
    }
    return out;
}

std::vector<Violation> validate(const RotationSpec& rot) {
    std::vector<Violation> out;
    require(out, std::isfinite(rot.refractive_index) && rot.refractive_index > 1.0, "n",
            "must exceed 1");
    require(out, std::isfinite(rot.radius) && rot.radius > 0.0, "radius_m", "must be positive");
    require(out, std::isfinite(rot.angular_velocity), "omega_rot_rad_s", "must be finite");
    require(out, std::isfinite(rot.wavelength) && rot.wavelength > 0.0, "lambda_m",
            "must be positive");
    require(out, std::isfinite(rot.dn_dlambda), "dn_dlambda", "must be finite");
    return out;
}

}  // namespace eoms
