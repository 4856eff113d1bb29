#include "eoms/presets.hpp"

#include "eoms/errors.hpp"

#include <numbers>

namespace eoms {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Default grid extents.
Axis delta_f_axis() { return {"delta_f_over_omega_b", -0.2, 0.2, 201, AxisScale::Linear}; }
Axis delta_a_axis() { return {"delta_a_over_omega_b", -2.0, 0.0, 201, AxisScale::Linear}; }
Axis temperature_axis(double stop) { return {"temperature_k", 1e-3, stop, 201, AxisScale::Log}; }

SeriesAxis opa_on_off() { return {"opa_gain_over_omega_b", {0.0, 0.08}}; }

ParameterFile map_params(double phase) {
    ParameterFile p = ParameterFile::reference();
    p.delta_c_eff_over_omega_b = 0.9;
    p.opa_phase_rad = phase;
    p.temperature_k = 0.01;
    return p;
}

// Thermal-study operating point shared by figs. 6, 7, 8, 10 and 11.
ParameterFile thermal_params() {
    ParameterFile p = ParameterFile::reference();
    p.delta_c_eff_over_omega_b = 1.0;
    p.delta_a_over_omega_b = -1.0;
    p.g_hz = 300e3;
    p.opa_phase_rad = 0.0;
    p.delta_f_over_omega_b = 0.1;
    return p;
}

FigurePreset bipartite_map(const char* name, const char* description, double phase,
                           const char* observable) {
    FigurePreset f{name, description, map_params(phase), {}};
    f.spec.series = opa_on_off();
    f.spec.axis1 = delta_f_axis();
    f.spec.axis2 = delta_a_axis();
    f.spec.observables = {observable};
    f.spec.direction = Direction::AsGiven;
    return f;
}

FigurePreset make_preset(std::string_view name) {
    if (name == "fig2") {
        return bipartite_map("fig2", "photon-exciton negativity over (Delta_F, Delta_a), OPA off/on",
                             0.0, "e_ca");
    }
    if (name == "fig3") {
        return bipartite_map("fig3", "photon-phonon negativity over (Delta_F, Delta_a), OPA off/on",
                             kHalfPi, "e_cb");
    }
    if (name == "fig4") {
        return bipartite_map("fig4", "exciton-phonon negativity over (Delta_F, Delta_a), OPA off/on",
                             0.0, "e_ab");
    }
    if (name == "fig5") {
        FigurePreset f{"fig5", "bidirectional contrast ratios over (G/kappa_c, Delta_a)",
                       map_params(kHalfPi), {}};
        f.params.delta_f_over_omega_b = 0.1;
        f.spec.axis1 = {"opa_gain_over_kappa_c", 0.0, 1.0, 201, AxisScale::Linear};
        f.spec.axis2 = delta_a_axis();
        f.spec.observables = {"c_ca", "c_cb", "c_ab"};
        f.spec.direction = Direction::Both;
        return f;
    }
    if (name == "fig6") {
        FigurePreset f{"fig6", "photon-exciton negativity versus temperature, OPA off/on",
                       thermal_params(), {}};
        f.spec.series = opa_on_off();
        f.spec.axis1 = temperature_axis(500.0);
        f.spec.observables = {"e_ca"};
        f.spec.direction = Direction::Both;
        return f;
    }
    if (name == "fig7") {
        FigurePreset f{"fig7", "photon-exciton negativity versus cavity decay at T = 260 K",
                       thermal_params(), {}};
        f.params.temperature_k = 260.0;
        f.spec.series = SeriesAxis{"opa_gain_over_omega_b", {0.06, 0.08, 0.10}};
        f.spec.axis1 = {"kappa_c_over_omega_b", 0.005, 1.0, 200, AxisScale::Linear};
        f.spec.observables = {"e_ca"};
        f.spec.direction = Direction::Both;
        return f;
    }
    if (name == "fig8") {
        FigurePreset f{"fig8", "photon-phonon and exciton-phonon negativity versus temperature",
                       thermal_params(), {}};
        f.spec.series = opa_on_off();
        f.spec.axis1 = temperature_axis(500.0);
        f.spec.observables = {"e_cb", "e_ab"};
        f.spec.direction = Direction::Both;
        return f;
    }
    if (name == "fig9") {
        FigurePreset f{"fig9", "minimum residual contangle over (Delta_F, Delta_a), OPA off/on",
                       map_params(kHalfPi), {}};
        f.spec.series = opa_on_off();
        f.spec.axis1 = delta_f_axis();
        f.spec.axis2 = delta_a_axis();
        f.spec.observables = {"r_tau_min"};
        f.spec.direction = Direction::AsGiven;
        return f;
    }
    if (name == "fig10") {
        FigurePreset f{"fig10", "tripartite contrast ratio versus Delta_a, OPA off/on",
                       thermal_params(), {}};
        f.spec.series = opa_on_off();
        f.spec.axis1 = delta_a_axis();
        f.spec.observables = {"c_r", "r_tau_min"};
        f.spec.direction = Direction::Both;
        return f;
    }
    if (name == "fig11") {
        FigurePreset f{"fig11", "minimum residual contangle versus temperature, OPA off/on",
                       thermal_params(), {}};
        f.spec.series = opa_on_off();
        f.spec.axis1 = temperature_axis(50.0);
        f.spec.observables = {"r_tau_min"};
        f.spec.direction = Direction::Both;
        return f;
    }
    throw UnknownPreset("unknown figure preset '" + std::string(name) + "' (expected fig2 .. fig11)");
}

}  // namespace

FigurePreset figure_preset(std::string_view name) { return make_preset(name); }

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5",  "fig6",
                                                "fig7", "fig8", "fig9", "fig10", "fig11"};
    return names;
}

const std::vector<PresetAuditEntry>& preset_audit() {
    static const std::vector<PresetAuditEntry> entries = [] {
        std::vector<PresetAuditEntry> e;
        auto num = [&e](const char* preset, const char* field, double value, const char* source) {
            e.push_back({preset, field, value, "", source});
        };
        auto txt = [&e](const char* preset, const char* field, const char* text, const char* source) {
            e.push_back({preset, field, 0.0, text, source});
        };
        // reference rates, shared by every preset
        for (const auto& p : preset_names()) {
            const char* n = p.c_str();
            num(n, "omega_b_hz", 1e9, "omega_b/2pi = 1 GHz");
            num(n, "omega_0_hz", 345e12, "omega_0/2pi = 345 THz");
            num(n, "kappa_a_hz", 80e6, "kappa_a/2pi = 80 MHz");
            num(n, "kappa_b_hz", 100e3, "kappa_b/2pi = 100 kHz");
            num(n, "j_hz", 280e6, "J/2pi = 280 MHz");
            num(n, "eps_hz", 0.1e12, "eps/2pi = 0.1 THz");
        }
        for (const char* n : {"fig2", "fig3", "fig4", "fig5", "fig6", "fig8", "fig9", "fig10", "fig11"}) {
            num(n, "kappa_c_hz", 80e6, "kappa_c/2pi = 80 MHz");
        }
        for (const char* n : {"fig2", "fig3", "fig4", "fig5", "fig9"}) {
            num(n, "g_hz", 500e3, "g/2pi = 500 kHz");
            num(n, "delta_c_eff_over_omega_b", 0.9, "Delta_c_eff = 0.9 omega_b");
            num(n, "temperature_k", 0.01, "T = 10 mK");
        }
        for (const char* n : {"fig2", "fig3", "fig4", "fig9"}) {
            num(n, "series:opa_gain_over_omega_b", 0.0, "G = 0");
            num(n, "series:opa_gain_over_omega_b", 0.08, "G = 0.08 omega_b");
            txt(n, "axis1", "delta_f_over_omega_b", "Delta_F/omega_b axis");
            txt(n, "axis2", "delta_a_over_omega_b", "Delta_a/omega_b axis");
        }
        num("fig2", "opa_phase_rad", 0.0, "phi = 0");
        num("fig3", "opa_phase_rad", kHalfPi, "phi = pi/2");
        num("fig4", "opa_phase_rad", 0.0, "phi = 0");
        num("fig9", "opa_phase_rad", kHalfPi, "phi = pi/2");

        num("fig5", "opa_phase_rad", kHalfPi, "phi = pi/2");
        num("fig5", "delta_f_over_omega_b", 0.1, "|Delta_F| = 0.1 omega_b");
        txt("fig5", "axis1", "opa_gain_over_kappa_c", "G/kappa_c axis");
        txt("fig5", "axis2", "delta_a_over_omega_b", "Delta_a/omega_b axis");
        txt("fig5", "direction", "both", "contrasts need both signs");

        for (const char* n : {"fig6", "fig7", "fig8", "fig10", "fig11"}) {
            num(n, "delta_c_eff_over_omega_b", 1.0, "Delta_c_eff = omega_b");
            num(n, "delta_a_over_omega_b", -1.0, "Delta_a = -omega_b");
            num(n, "g_hz", 300e3, "g/2pi = 300 kHz");
            num(n, "delta_f_over_omega_b", 0.1, "|Delta_F| = 0.1 omega_b");
            num(n, "opa_phase_rad", 0.0, "phi = 0");
            txt(n, "direction", "both", "|Delta_F| = 0.1 omega_b");
        }
        for (const char* n : {"fig6", "fig8", "fig10", "fig11"}) {
            num(n, "series:opa_gain_over_omega_b", 0.0, "G = 0");
            num(n, "series:opa_gain_over_omega_b", 0.08, "G = 0.08 omega_b");
        }
        for (const char* n : {"fig6", "fig8", "fig11"}) {
            txt(n, "axis1", "temperature_k", "temperature axis");
        }
        num("fig7", "temperature_k", 260.0, "T = 260 K");
        num("fig7", "series:opa_gain_over_omega_b", 0.06, "G = 0.06 omega_b");
        num("fig7", "series:opa_gain_over_omega_b", 0.08, "G = 0.08 omega_b");
        num("fig7", "series:opa_gain_over_omega_b", 0.10, "G = 0.10 omega_b");
        txt("fig7", "axis1", "kappa_c_over_omega_b", "kappa_c/omega_b axis");
        txt("fig10", "axis1", "delta_a_over_omega_b", "Delta_a/omega_b axis");
        return e;
    }();
    return entries;
}

}  // namespace eoms
