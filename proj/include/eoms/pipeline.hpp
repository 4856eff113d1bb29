#pragma once

#include "eoms/entanglement.hpp"
#include "eoms/gaussian_dynamics.hpp"
#include "eoms/physical_model.hpp"
#include "eoms/steady_state.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace eoms {

/// Drive direction for a fixed rotation sense. Left uses +|Delta_F|, Right
/// uses -|Delta_F|, Both evaluates the two and forms contrast ratios.
/// AsGiven keeps the signed Delta_F of the parameter set (used by maps that
/// sweep Delta_F through zero).
enum class Direction { AsGiven, Left, Right, Both };

[[nodiscard]] std::string_view direction_name(Direction d) noexcept;
/// Throws InvalidInput for anything other than as_given/left/right/both.
[[nodiscard]] Direction parse_direction(std::string_view text);

enum class FailureKind { None, ParametricSingularity, Unstable, EigenFailure, SingularSystem };

[[nodiscard]] std::string_view failure_name(FailureKind k) noexcept;

enum class Depth { StabilityOnly, Full };

/// Everything computed at one parameter point. Computation failures are
/// recorded, never thrown; fields past the failing stage stay empty.
struct PointEvaluation {
    SystemParams params;
    std::optional<SteadyState> steady;
    std::optional<DriftMatrix> drift;
    std::optional<DiffusionMatrix> diffusion;
    std::optional<StabilityReport> stability;
    std::optional<CovarianceMatrix> covariance;
    std::optional<EntanglementReport> report;
    FailureKind failure = FailureKind::None;
    std::string message;

    [[nodiscard]] bool ok() const noexcept { return failure == FailureKind::None; }
    [[nodiscard]] bool stable() const noexcept { return stability && stability->stable; }
};

[[nodiscard]] PointEvaluation evaluate(const SystemParams& params, Depth depth = Depth::Full);

struct Contrasts {
    double c_ca = 0.0;
    double c_cb = 0.0;
    double c_ab = 0.0;
    std::optional<double> c_r;  ///< absent unless both tripartite values exist
};

struct DirectedEvaluation {
    Direction direction;
    PointEvaluation evaluation;
};

struct PointResult {
    std::vector<DirectedEvaluation> runs;  ///< one run, or left then right for Both
    std::optional<Contrasts> contrasts;

    [[nodiscard]] bool ok() const noexcept;
    [[nodiscard]] bool stable() const noexcept;
};

/// Applies the direction convention to params.delta_f and evaluates.
[[nodiscard]] PointResult run_point(const SystemParams& params, Direction direction,
                                    Depth depth = Depth::Full);

}  // namespace eoms
