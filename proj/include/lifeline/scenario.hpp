#pragma once
/**
 * @file scenario.hpp
 * @brief Environment side of an execution: initial configuration, companion
 * trajectories and the demon's choice of local frames.
 *
 * Randomness comes from `Rng`, a 64-bit Mersenne Twister (std::mt19937_64,
 * whose output sequence is fixed by the C++ standard) with our own mapping to
 * doubles, so draws are identical on every platform. Independent streams are
 * derived from one seed with SplitMix64.
 */

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lifeline/model.hpp"

namespace lifeline {

/// SplitMix64 finalizer; used to derive stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of sub-stream `stream` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    /// Uniform in {0, ..., bound-1}; bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

/// Companion trajectories. Every displacement has norm <= D.
struct Waypoints {
    std::vector<Point2> points;
    bool loop{false};
};
struct RandomWalk {};
struct Flee {
    Point2 direction{1.0, 0.0};
};
/// Flees along `direction` for `outbound_rounds`, then heads back to the base.
struct Shrink {
    Point2 direction{1.0, 0.0};
    std::size_t outbound_rounds{0};
};
struct Replay {
    std::vector<Point2> displacements;
};

using TrajectoryKind = std::variant<Waypoints, RandomWalk, Flee, Shrink, Replay>;

std::string_view trajectory_name(const TrajectoryKind& k);

class Trajectory {
public:
    explicit Trajectory(TrajectoryKind kind);

    const TrajectoryKind& kind() const { return kind_; }
    std::size_t cursor() const { return cursor_; }

    /// Next companion displacement (norm <= D).
    Point2 next_move(const Params& p, const Point2& current, Rng& rng);

private:
    TrajectoryKind kind_;
    std::size_t cursor_{0};
};

inline Point2 next_companion_move(Trajectory& t, const Params& p, const Point2& current, Rng& rng) {
    return t.next_move(p, current, rng);
}

enum class FramePolicy { identity, random_isometry };

std::string_view frame_policy_name(FramePolicy f);
FramePolicy parse_frame_policy(std::string_view s);  // throws ConfigError

/// One frame per robot, each sending that robot's location to the origin.
/// Draws (if any) are consumed in identifier order.
std::vector<Frame> next_frames(FramePolicy policy, const Configuration& cf, Rng& rng);

/// Companion launched at the base; every other robot waiting at the base.
Configuration config_init(const Params& p);

}  // namespace lifeline
