#pragma once

#include "eoms/errors.hpp"
#include "eoms/parameter_file.hpp"
#include "eoms/pipeline.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace eoms {

enum class AxisScale { Linear, Log };

/// A swept parameter: `count` points from start to stop inclusive.
struct Axis {
    std::string name;
    double start = 0.0;
    double stop = 0.0;
    std::size_t count = 2;
    AxisScale scale = AxisScale::Linear;

    /// Grid values. The i-th value depends only on (start, stop, count, i),
    /// so a refined grid reproduces shared points bit-exactly when the
    /// refinement nests (count' - 1 a multiple of count - 1).
    [[nodiscard]] std::vector<double> values() const;
};

/// Discrete outer axis, e.g. OPA off/on panels of a figure.
struct SeriesAxis {
    std::string name;
    std::vector<double> values;
};

/// Observables a sweep can report. Per-direction quantities get _left/_right
/// suffixes when the direction is Both; c_* contrast ratios need Both.
[[nodiscard]] const std::vector<std::string>& known_observables();

struct SweepSpec {
    std::optional<SeriesAxis> series;
    Axis axis1;
    std::optional<Axis> axis2;
    std::vector<std::pair<std::string, double>> overrides;
    std::vector<std::string> observables;
    Direction direction = Direction::AsGiven;

    /// Throws InvalidInput on unknown keys or invalid axes.
    static SweepSpec from_json(const nlohmann::json& j);
    static SweepSpec load(const std::filesystem::path& path);
    [[nodiscard]] nlohmann::ordered_json to_json() const;

    /// Throws InvalidInput when an invariant fails: counts >= 2, axes in the
    /// sweepable set, log axes strictly positive, observables known, contrast
    /// observables only with direction Both.
    void validate() const;
};

struct ResultRow {
    std::vector<double> axis_values;
    std::vector<std::optional<double>> cells;  ///< empty cell = unavailable, never zero-filled
    bool stable = false;
    std::string error;
};

struct ResultTable {
    std::vector<std::string> axis_names;
    std::vector<std::string> columns;  ///< observable columns, after the axes
    std::vector<ResultRow> rows;
    /// tool, version, timestamp, resolved parameters, sweep description
    nlohmann::ordered_json metadata;
};

struct SweepOptions {
    std::size_t threads = 0;  ///< 0: hardware concurrency
    bool strict = false;
    std::string timestamp;  ///< empty: current UTC time
    std::string preset;     ///< recorded in metadata when set
};

/// Raised in strict mode once the grid has been evaluated and at least one
/// point failed.
class StrictModeFailure : public Error {
public:
    using Error::Error;
};

/// Evaluates every grid point, series outermost, then axis1, then axis2.
/// Points are independent and may be evaluated concurrently; the table is
/// identical for any thread count.
[[nodiscard]] ResultTable run_sweep(const ParameterFile& base, const SweepSpec& spec,
                                    const SweepOptions& options = {});

/// Stability map over the same grid: spectral abscissa (units of omega_b)
/// and stable flag, without covariance solves.
[[nodiscard]] ResultTable run_stability_map(const ParameterFile& base, const SweepSpec& spec,
                                            const SweepOptions& options = {});

/// Observable value of one evaluated point; empty when unavailable.
[[nodiscard]] std::optional<double> observable_value(const PointResult& point,
                                                     const std::string& column);

/// Column names a spec produces, in emission order.
[[nodiscard]] std::vector<std::string> observable_columns(const SweepSpec& spec);

[[nodiscard]] std::string tool_version();

}  // namespace eoms
