#include "eoms/parameter_file.hpp"

#include "eoms/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>

namespace eoms {

namespace {

struct FieldRef {
    const char* key;
    double ParameterFile::*member;
};

constexpr std::array<FieldRef, 14> kFields{{
    {"omega_b_hz", &ParameterFile::omega_b_hz},
    {"omega_0_hz", &ParameterFile::omega_0_hz},
    {"delta_c_eff_over_omega_b", &ParameterFile::delta_c_eff_over_omega_b},
    {"delta_a_over_omega_b", &ParameterFile::delta_a_over_omega_b},
    {"delta_f_over_omega_b", &ParameterFile::delta_f_over_omega_b},
    {"kappa_c_hz", &ParameterFile::kappa_c_hz},
    {"kappa_a_hz", &ParameterFile::kappa_a_hz},
    {"kappa_b_hz", &ParameterFile::kappa_b_hz},
    {"j_hz", &ParameterFile::j_hz},
    {"g_hz", &ParameterFile::g_hz},
    {"eps_hz", &ParameterFile::eps_hz},
    {"opa_gain_over_omega_b", &ParameterFile::opa_gain_over_omega_b},
    {"opa_phase_rad", &ParameterFile::opa_phase_rad},
    {"temperature_k", &ParameterFile::temperature_k},
}};

struct RotationRef {
    const char* key;
    double RotationSpec::*member;
};

constexpr std::array<RotationRef, 5> kRotationFields{{
    {"n", &RotationSpec::refractive_index},
    {"radius_m", &RotationSpec::radius},
    {"omega_rot_rad_s", &RotationSpec::angular_velocity},
    {"lambda_m", &RotationSpec::wavelength},
    {"dn_dlambda", &RotationSpec::dn_dlambda},
}};

double number_at(const nlohmann::json& obj, const std::string& key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number()) {
        throw InvalidInput(where + key + ": expected a number");
    }
    return v.get<double>();
}

RotationSpec rotation_from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InvalidInput("rotation: expected an object");
    }
    for (const auto& [key, value] : j.items()) {
        const bool known = std::any_of(kRotationFields.begin(), kRotationFields.end(),
                                       [&](const RotationRef& f) { return key == f.key; });
        if (!known) {
            throw InvalidInput("rotation: unknown key '" + key + "'");
        }
    }
    RotationSpec rot;
    for (const auto& f : kRotationFields) {
        if (!j.contains(f.key)) {
            if (std::string_view(f.key) == "dn_dlambda") {
                continue;  // defaults to 0
            }
            throw InvalidInput(std::string("rotation: missing key '") + f.key + "'");
        }
        rot.*f.member = number_at(j, f.key, "rotation.");
    }
    return rot;
}

}  // namespace

ParameterFile ParameterFile::reference() {
    ParameterFile f;
    f.omega_b_hz = 1e9;
    f.omega_0_hz = 345e12;
    f.delta_c_eff_over_omega_b = 0.9;
    f.delta_a_over_omega_b = -1.0;
    f.delta_f_over_omega_b = 0.1;
    f.kappa_c_hz = 80e6;
    f.kappa_a_hz = 80e6;
    f.kappa_b_hz = 100e3;
    f.j_hz = 280e6;
    f.g_hz = 500e3;
    f.eps_hz = 0.1e12;
    f.opa_gain_over_omega_b = 0.0;
    f.opa_phase_rad = 0.0;
    f.temperature_k = 0.01;
    return f;
}

ParameterFile ParameterFile::from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw InvalidInput("parameter file: top level must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (key == "rotation") {
            continue;
        }
        const bool known = std::any_of(kFields.begin(), kFields.end(),
                                       [&](const FieldRef& f) { return key == f.key; });
        if (!known) {
            throw InvalidInput("parameter file: unknown key '" + key + "'");
        }
    }
    ParameterFile f;
    if (j.contains("rotation")) {
        f.rotation = rotation_from_json(j.at("rotation"));
        if (j.contains("delta_f_over_omega_b")) {
            throw InvalidInput(
                "parameter file: give either delta_f_over_omega_b or a rotation object, not both");
        }
    }
    for (const auto& field : kFields) {
        const std::string key = field.key;
        if (key == "delta_f_over_omega_b" && f.rotation) {
            continue;
        }
        if (!j.contains(key)) {
            throw InvalidInput("parameter file: missing key '" + key + "'");
        }
        f.*field.member = number_at(j, key, "parameter file: ");
    }
    return f;
}

ParameterFile ParameterFile::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open parameter file " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("parameter file " + path.string() + ": " + e.what());
    }
    return from_json(j);
}

nlohmann::ordered_json ParameterFile::to_json() const {
    nlohmann::ordered_json j;
    for (const auto& field : kFields) {
        if (std::string_view(field.key) == "delta_f_over_omega_b" && rotation) {
            continue;
        }
        j[field.key] = this->*field.member;
    }
    if (rotation) {
        nlohmann::ordered_json r;
        for (const auto& f : kRotationFields) {
            r[f.key] = (*rotation).*f.member;
        }
        j["rotation"] = r;
    }
    return j;
}

void ParameterFile::set(std::string_view key, double value) {
    if (key == "opa_gain_over_kappa_c") {
        opa_gain_over_omega_b = value * kappa_c_hz / omega_b_hz;
        return;
    }
    if (key == "kappa_c_over_omega_b") {
        kappa_c_hz = value * omega_b_hz;
        return;
    }
    for (const auto& field : kFields) {
        if (key == field.key) {
            this->*field.member = value;
            if (key == "delta_f_over_omega_b") {
                rotation.reset();
            }
            return;
        }
    }
    throw InvalidInput("unknown parameter '" + std::string(key) + "'");
}

double ParameterFile::get(std::string_view key) const {
    if (key == "opa_gain_over_kappa_c") {
        return opa_gain_over_omega_b * omega_b_hz / kappa_c_hz;
    }
    if (key == "kappa_c_over_omega_b") {
        return kappa_c_hz / omega_b_hz;
    }
    if (key == "delta_f_over_omega_b" && rotation) {
        return resolve().delta_f / hz_to_angular(omega_b_hz);
    }
    for (const auto& field : kFields) {
        if (key == field.key) {
            return this->*field.member;
        }
    }
    throw InvalidInput("unknown parameter '" + std::string(key) + "'");
}

SystemParams ParameterFile::resolve() const {
    SystemParams p;
    p.omega_b = hz_to_angular(omega_b_hz);
    p.omega_0 = hz_to_angular(omega_0_hz);
    p.delta_c_eff = delta_c_eff_over_omega_b * p.omega_b;
    p.delta_a = delta_a_over_omega_b * p.omega_b;
    p.kappa_c = hz_to_angular(kappa_c_hz);
    p.kappa_a = hz_to_angular(kappa_a_hz);
    p.kappa_b = hz_to_angular(kappa_b_hz);
    p.coupling_j = hz_to_angular(j_hz);
    p.coupling_g = hz_to_angular(g_hz);
    p.drive_eps = hz_to_angular(eps_hz);
    p.opa_gain = opa_gain_over_omega_b * p.omega_b;
    p.opa_phase = reduce_phase(opa_phase_rad);
    p.temperature = temperature_k;

    std::vector<Violation> problems;
    if (rotation) {
        problems = validate(*rotation);
        // lab-frame cavity resonance seen by the rotating resonator
        p.delta_f = sagnac_shift(*rotation, p.omega_0 + p.delta_c_eff);
    } else {
        p.delta_f = delta_f_over_omega_b * p.omega_b;
    }
    for (auto& v : validate(p)) {
        problems.push_back(std::move(v));
    }
    if (!problems.empty()) {
        std::string msg = "invalid parameters:";
        for (const auto& v : problems) {
            msg += " " + v.field + " " + v.message + ";";
        }
        throw InvalidInput(msg);
    }
    return p;
}

const std::vector<std::string>& settable_keys() {
    static const std::vector<std::string> keys = [] {
        std::vector<std::string> k;
        for (const auto& f : kFields) {
            k.emplace_back(f.key);
        }
        k.emplace_back("opa_gain_over_kappa_c");
        k.emplace_back("kappa_c_over_omega_b");
        return k;
    }();
    return keys;
}

const std::vector<std::string>& sweepable_keys() {
    static const std::vector<std::string> keys{
        "delta_c_eff_over_omega_b", "delta_a_over_omega_b", "delta_f_over_omega_b",
        "opa_gain_over_omega_b",    "opa_gain_over_kappa_c", "opa_phase_rad",
        "temperature_k",            "kappa_c_over_omega_b",  "g_hz",
    };
    return keys;
}

}  // namespace eoms
