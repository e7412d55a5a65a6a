#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "scope/policy.hpp"

namespace scope {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline constexpr double deg_to_rad(double deg) {
    return deg * std::numbers::pi / 180.0;
}

// Motor i on leg l is motor index 3l + joint, joint 0 = coxa, 1 = femur,
// 2 = tibia (matches the row layout of the pose matrix).
enum class JointClass : std::size_t { kCoxa = 0, kFemur = 1, kTibia = 2 };

inline JointClass joint_class(std::size_t motor) {
    return static_cast<JointClass>(motor % 3);
}

// Angular limits per joint class, radians.
struct JointLimits {
    std::array<double, 3> lo{};
    std::array<double, 3> hi{};

    static JointLimits mantis() {
        JointLimits j;
        j.lo = {deg_to_rad(-15.0), deg_to_rad(40.0), deg_to_rad(-150.0)};
        j.hi = {deg_to_rad(15.0), deg_to_rad(80.0), deg_to_rad(-105.0)};
        return j;
    }

    void validate() const {
        for (std::size_t k = 0; k < 3; ++k)
            if (!(lo[k] < hi[k]))
                throw std::invalid_argument("JointLimits: lo must be below hi");
    }

    double lo_for(std::size_t motor) const { return lo[motor % 3]; }
    double hi_for(std::size_t motor) const { return hi[motor % 3]; }
    double halfrange(std::size_t motor) const { return 0.5 * (hi_for(motor) - lo_for(motor)); }
    double midpoint(std::size_t motor) const { return 0.5 * (hi_for(motor) + lo_for(motor)); }
};

struct GaitConfig {
    double dtheta_max = 0.2; // rad per 32 ms frame
    std::size_t slices = 4;
};

struct MotorGait {
    double phase = 0.0;     // [0, 2pi)
    double amplitude = 0.0; // [0, halfrange]
    double offset = 0.0;    // [lo, hi]
};

struct GaitParams {
    std::array<MotorGait, kMotors> motors{};
};

struct MotorCommand {
    std::size_t motor = 0;
    double target = 0.0;
    std::vector<double> substeps;
};

// Map the unbounded policy output onto legal gait parameters, motor-major
// (phase, amplitude, offset) triples.
inline GaitParams normalize_params(const PolicyOutput& raw, const JointLimits& limits) {
    for (double v : raw.values)
        if (!std::isfinite(v))
            throw std::invalid_argument("normalize_params: non-finite policy output");
    GaitParams params;
    for (std::size_t i = 0; i < kMotors; ++i) {
        MotorGait& g = params.motors[i];
        double phase = std::fmod(raw.values[3 * i], kTwoPi);
        if (phase < 0.0) phase += kTwoPi;
        if (phase >= kTwoPi) phase = 0.0; // fmod rounding can land exactly on 2pi
        g.phase = phase;
        g.amplitude = std::min(std::fabs(raw.values[3 * i + 1]), limits.halfrange(i));
        g.offset = std::clamp(raw.values[3 * i + 2], limits.lo_for(i), limits.hi_for(i));
    }
    return params;
}

// theta_i(t) = mu_i + A_i sin(2 pi t + phi_i), clamped to the joint range.
// The sine period is fixed at 1 s; there is no frequency parameter.
inline double target_angle(const GaitParams& params, const JointLimits& limits,
                           std::size_t motor, double t) {
    const MotorGait& g = params.motors[motor];
    const double theta = g.offset + g.amplitude * std::sin(kTwoPi * t + g.phase);
    return std::clamp(theta, limits.lo_for(motor), limits.hi_for(motor));
}

// One frame's motion: the per-frame delta is rate-limited to dtheta_max and
// linearly sliced into sub-step targets from prev_angle toward the target.
inline MotorCommand step_command(const GaitParams& params, const JointLimits& limits,
                                 const GaitConfig& cfg, std::size_t motor,
                                 double prev_angle, double t) {
    if (cfg.slices == 0)
        throw std::invalid_argument("step_command: slices must be positive");
    const double desired = target_angle(params, limits, motor, t);
    const double delta = std::clamp(desired - prev_angle, -cfg.dtheta_max, cfg.dtheta_max);
    MotorCommand cmd;
    cmd.motor = motor;
    cmd.substeps.resize(cfg.slices);
    const double lo = limits.lo_for(motor);
    const double hi = limits.hi_for(motor);
    for (std::size_t s = 0; s < cfg.slices; ++s) {
        const double frac = static_cast<double>(s + 1) / static_cast<double>(cfg.slices);
        cmd.substeps[s] = std::clamp(prev_angle + delta * frac, lo, hi);
    }
    cmd.target = cmd.substeps.back();
    return cmd;
}

} // namespace scope
