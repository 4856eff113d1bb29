#pragma once

#include "eoms/parameter_file.hpp"
#include "eoms/sweep.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace eoms {

/// Parameter set and sweep that regenerate one figure.
struct FigurePreset {
    std::string name;
    std::string description;
    ParameterFile params;
    SweepSpec spec;
};

/// fig2 ... fig11. Throws UnknownPreset for anything else.
[[nodiscard]] FigurePreset figure_preset(std::string_view name);

[[nodiscard]] const std::vector<std::string>& preset_names();

/// One stated value a preset must carry. `field` is a parameter key,
/// "series:<key>" for a discrete panel value, "axis1"/"axis2" for the swept
/// parameter name, or "direction".
struct PresetAuditEntry {
    std::string preset;
    std::string field;
    double value = 0.0;       ///< for numeric fields
    std::string text;         ///< for name-valued fields
    std::string source;       ///< the stated value, as text
};

[[nodiscard]] const std::vector<PresetAuditEntry>& preset_audit();

}  // namespace eoms
