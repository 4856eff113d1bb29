#include "eoms/pipeline.hpp"

#include "eoms/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace eoms {

std::string_view direction_name(Direction d) noexcept {
    switch (d) {
        case Direction::AsGiven:
            return "as_given";
        case Direction::Left:
            return "left";
        case Direction::Right:
            return "right";
        case Direction::Both:
            return "both";
    }
    return "?";
}

Direction parse_direction(std::string_view text) {
    for (auto d : {Direction::AsGiven, Direction::Left, Direction::Right, Direction::Both}) {
        if (text == direction_name(d)) {
            return d;
        }
    }
    throw InvalidInput("unknown direction '" + std::string(text) +
                       "' (expected as_given, left, right or both)");
}

std::string_view failure_name(FailureKind k) noexcept {
    switch (k) {
        case FailureKind::None:
            return "";
        case FailureKind::ParametricSingularity:
            return "parametric_singularity";
        case FailureKind::Unstable:
            return "unstable";
        case FailureKind::EigenFailure:
            return "eigen_failure";
        case FailureKind::SingularSystem:
            return "singular_system";
    }
    return "?";
}

PointEvaluation evaluate(const SystemParams& params, Depth depth) {
    PointEvaluation e;
    e.params = params;
    try {
        e.steady = solve_steady_state(params);
        e.drift = build_drift(params, *e.steady);
        e.diffusion = build_diffusion(params, occupations(params));
        e.stability = stability(*e.drift);
        if (!e.stability->stable) {
            e.failure = FailureKind::Unstable;
            e.message = "drift matrix has spectral abscissa " +
                        std::to_string(e.stability->spectral_abscissa / params.omega_b) +
                        " omega_b";
            return e;
        }
        if (depth == Depth::StabilityOnly) {
            return e;
        }
        e.covariance = solve_lyapunov(*e.drift, *e.diffusion);
        e.report = analyze(*e.covariance);
    } catch (const ParametricSingularity& ex) {
        e.failure = FailureKind::ParametricSingularity;
        e.message = ex.what();
    } catch (const Unstable& ex) {
        e.failure = FailureKind::Unstable;
        e.message = ex.what();
    } catch (const EigenFailure& ex) {
        e.failure = FailureKind::EigenFailure;
        e.message = ex.what();
    } catch (const SingularSystem& ex) {
        e.failure = FailureKind::SingularSystem;
        e.message = ex.what();
    }
    return e;
}

bool PointResult::ok() const noexcept {
    for (const auto& r : runs) {
        if (!r.evaluation.ok()) {
            return false;
        }
    }
    return true;
}

bool PointResult::stable() const noexcept {
    for (const auto& r : runs) {
        if (!r.evaluation.stable()) {
            return false;
        }
    }
    return !runs.empty();
}

PointResult run_point(const SystemParams& params, Direction direction, Depth depth) {
    PointResult result;
    auto directed = [&](Direction d) {
        SystemParams p = params;
        if (d == Direction::Left) {
            p.delta_f = std::abs(params.delta_f);
        } else if (d == Direction::Right) {
            p.delta_f = -std::abs(params.delta_f);
        }
        result.runs.push_back({d, evaluate(p, depth)});
    };
    if (direction == Direction::Both) {
        directed(Direction::Left);
        directed(Direction::Right);
        const auto& left = result.runs[0].evaluation.report;
        const auto& right = result.runs[1].evaluation.report;
        if (left && right) {
            Contrasts c;
            c.c_ca = contrast_ratio(left->e_ca.value, right->e_ca.value);
            c.c_cb = contrast_ratio(left->e_cb.value, right->e_cb.value);
            c.c_ab = contrast_ratio(left->e_ab.value, right->e_ab.value);
            if (left->r_tau_min && right->r_tau_min) {
                c.c_r = contrast_ratio(std::max(0.0, *left->r_tau_min),
                                       std::max(0.0, *right->r_tau_min));
            }
            result.contrasts = c;
        }
    } else {
        directed(direction);
    }
    return result;
}

}  // namespace eoms
