#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <vector>

#include "scope/gait.hpp"
#include "scope/matrix.hpp"
#include "scope/policy.hpp"

namespace scope {

// Deterministic kinematic stand-in for a physics simulator. Motors track
// their commanded targets exactly; body motion comes from a stance-and-sweep
// rule (see step_frame). No contact solver, no RNG anywhere.

struct SimConfig {
    double gain = 0.02;                    // meters per rad of stance coxa sweep
    double stance_fraction = 1.0 / 3.0;    // femur in the lower fraction of its range = stance
    std::size_t frames_per_subepisode = 94; // 94 * 32 ms = 3.008 s
    std::size_t subepisodes_per_episode = 5;
    double frame_dt = 0.032;
};

// One 6x9 snapshot: row = leg, columns = (p, v, a) for coxa, femur, tibia.
struct PoseFrame {
    std::array<double, kLegs * kFrameCols> values{};

    double& at(std::size_t leg, std::size_t col) { return values[leg * kFrameCols + col]; }
    double at(std::size_t leg, std::size_t col) const { return values[leg * kFrameCols + col]; }
};

// Rolling window of the most recent 50 pose frames, newest first.
// Materializes to the 6x450 matrix [M_t M_{t-1} ... M_{t-49}]; until 50
// frames exist, missing blocks repeat the oldest available frame.
class StateHistory {
public:
    static constexpr std::size_t kCapacity = kHistoryFrames;

    void push(const PoseFrame& frame) {
        frames_.push_front(frame);
        if (frames_.size() > kCapacity) frames_.pop_back();
    }

    std::size_t size() const { return frames_.size(); }
    bool empty() const { return frames_.empty(); }
    void clear() { frames_.clear(); }

    // age 0 = newest
    const PoseFrame& frame(std::size_t age) const { return frames_.at(age); }

    RealMatrix materialize() const {
        if (frames_.empty())
            throw std::logic_error("StateHistory::materialize: no frames yet");
        RealMatrix m(kLegs, kFrameCols * kCapacity);
        for (std::size_t b = 0; b < kCapacity; ++b) {
            const PoseFrame& f = frames_[std::min(b, frames_.size() - 1)];
            for (std::size_t leg = 0; leg < kLegs; ++leg)
                for (std::size_t col = 0; col < kFrameCols; ++col)
                    m(leg, b * kFrameCols + col) = f.at(leg, col);
        }
        return m;
    }

private:
    std::deque<PoseFrame> frames_;
};

struct RobotState {
    std::array<double, kMotors> angles{};
    std::array<double, kMotors> velocities{};
    std::array<double, kMotors> accelerations{};
    double x = 0.0;
    double y = 0.0;
    std::uint64_t elapsed_frames = 0;
};

struct TraceRow {
    std::uint64_t frame = 0;
    double x = 0.0;
    double y = 0.0;
    std::array<double, kMotors> angles{};
};

struct EpisodeResult {
    double fitness = 0.0;       // meters, Euclidean displacement over the episode
    std::size_t frames = 0;
    StateHistory history;
};

class HexapodSim {
public:
    HexapodSim(SimConfig sim_cfg, GaitConfig gait_cfg, JointLimits limits)
        : sim_cfg_(sim_cfg), gait_cfg_(gait_cfg), limits_(limits) {
        limits_.validate();
        if (sim_cfg_.frame_dt <= 0.0)
            throw std::invalid_argument("HexapodSim: frame_dt must be positive");
        reset();
    }

    // Midpoint pose, zero velocity, empty trace, history seeded with one
    // legal frame so the policy can be queried from the very first step.
    void reset() {
        state_ = RobotState{};
        for (std::size_t i = 0; i < kMotors; ++i)
            state_.angles[i] = limits_.midpoint(i);
        history_.clear();
        history_.push(make_frame());
        trace_.clear();
        if (trace_enabled_) record_trace();
    }

    const RobotState& state() const { return state_; }
    const StateHistory& history() const { return history_; }
    const SimConfig& config() const { return sim_cfg_; }
    const GaitConfig& gait_config() const { return gait_cfg_; }
    const JointLimits& limits() const { return limits_; }

    void set_body_position(double x, double y) {
        state_.x = x;
        state_.y = y;
    }

    void enable_trace(bool on) { trace_enabled_ = on; }
    const std::vector<TraceRow>& trace() const { return trace_; }

    // Advance one 32 ms frame. Locomotion rule: a leg is in stance when its
    // femur sits in the lower stance_fraction of the femur range. Per frame,
    //   dx = gain * support * sum_{stance legs} (-coxa angular velocity) * dt
    // with support = min(1, stance_count / 3); dy is the same sum signed per
    // body side (legs 0-2 positive, 3-5 negative) so mirrored gaits track a
    // straight line. Velocity/acceleration are backward finite differences
    // of the position readings.
    void step_frame(const std::array<MotorCommand, kMotors>& commands) {
        const double dt = sim_cfg_.frame_dt;
        std::array<double, kMotors> pos, vel, acc;
        for (std::size_t i = 0; i < kMotors; ++i) {
            const MotorCommand& cmd = commands[i];
            pos[i] = cmd.substeps.empty() ? state_.angles[i] : cmd.substeps.back();
            vel[i] = (pos[i] - state_.angles[i]) / dt;
            acc[i] = (vel[i] - state_.velocities[i]) / dt;
        }

        const double femur_threshold =
            limits_.lo[1] + (limits_.hi[1] - limits_.lo[1]) * sim_cfg_.stance_fraction;
        std::size_t stance_count = 0;
        double fwd = 0.0, lat = 0.0;
        for (std::size_t leg = 0; leg < kLegs; ++leg) {
            if (pos[3 * leg + 1] > femur_threshold) continue;
            ++stance_count;
            const double sweep = -vel[3 * leg]; // backward coxa sweep propels forward
            fwd += sweep;
            lat += (leg < 3 ? 1.0 : -1.0) * sweep;
        }
        const double support = std::min(1.0, static_cast<double>(stance_count) / 3.0);
        state_.x += sim_cfg_.gain * support * fwd * dt;
        state_.y += sim_cfg_.gain * support * lat * dt;

        state_.angles = pos;
        state_.velocities = vel;
        state_.accelerations = acc;
        ++state_.elapsed_frames;
        history_.push(make_frame());
        if (trace_enabled_) record_trace();
    }

    // One 3.008 s control interval under fixed gait parameters.
    void run_subepisode(const GaitParams& params) {
        std::array<MotorCommand, kMotors> commands;
        for (std::size_t f = 0; f < sim_cfg_.frames_per_subepisode; ++f) {
            const double t =
                static_cast<double>(state_.elapsed_frames + 1) * sim_cfg_.frame_dt;
            for (std::size_t i = 0; i < kMotors; ++i)
                commands[i] =
                    step_command(params, limits_, gait_cfg_, i, state_.angles[i], t);
            step_frame(commands);
        }
    }

    // Full fitness episode: the controller is queried for fresh gait
    // parameters at the start of each sub-episode; fitness is the Euclidean
    // distance between the body positions at episode start and end. State
    // and history persist into the next episode (the robot is never reset
    // between evaluations).
    template <typename Controller>
    EpisodeResult run_episode(Controller&& controller) {
        const double x0 = state_.x;
        const double y0 = state_.y;
        for (std::size_t s = 0; s < sim_cfg_.subepisodes_per_episode; ++s)
            run_subepisode(controller(static_cast<const StateHistory&>(history_)));
        EpisodeResult result;
        result.fitness = std::hypot(state_.x - x0, state_.y - y0);
        result.frames = sim_cfg_.subepisodes_per_episode * sim_cfg_.frames_per_subepisode;
        result.history = history_;
        return result;
    }

private:
    PoseFrame make_frame() const {
        PoseFrame f;
        for (std::size_t leg = 0; leg < kLegs; ++leg)
            for (std::size_t joint = 0; joint < 3; ++joint) {
                const std::size_t motor = 3 * leg + joint;
                f.at(leg, 3 * joint + 0) = state_.angles[motor];
                f.at(leg, 3 * joint + 1) = state_.velocities[motor];
                f.at(leg, 3 * joint + 2) = state_.accelerations[motor];
            }
        return f;
    }

    void record_trace() {
        trace_.push_back({state_.elapsed_frames, state_.x, state_.y, state_.angles});
    }

    SimConfig sim_cfg_;
    GaitConfig gait_cfg_;
    JointLimits limits_;
    RobotState state_;
    StateHistory history_;
    bool trace_enabled_ = false;
    std::vector<TraceRow> trace_;
};

} // namespace scope
