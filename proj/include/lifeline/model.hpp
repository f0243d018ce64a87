#pragma once
/**
 * @file model.hpp
 * @brief Fully synchronous, rigid Look-Compute-Move execution model.
 *
 * A configuration maps robot names 0..n-1 to robot states; name i always
 * carries identifier i and robot 0 is the companion. One `step` of the
 * closed-loop system is
 *
 *     round -> apply_withdrawals -> apply_launch
 *
 * where `round` moves every launched alive relay according to the protocol
 * (robogram) and moves the companion by the displacement chosen by the
 * environment. Every stage reads only its input snapshot.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lifeline/geometry.hpp"

namespace lifeline {

using Ident = std::size_t;

inline constexpr Ident kCompanion = 0;

/// Tolerance applied to the per-round travel bound D.
inline constexpr double kSpeedTolerance = 1e-12;

/// Slack, as a fraction of D, on the D and Dmax radii of the withdrawal rule.
/// Positions computed through different local frames differ by rounding, and
/// a robot at exactly D from a lower one must withdraw in every frame.
inline constexpr double kWithdrawalTolerance = 1e-10;

struct Params {
    std::size_t n{1};               ///< robot count, companion included
    double D{1.0};                  ///< max travel per round
    double Dmax{7.5};               ///< visibility / transmission radius
    double launch_threshold{3.5};   ///< base launches once every robot is farther than this
    Point2 base{};

    double pursuit_distance() const { return Dmax - D; }  // Dp
    double collision_radius() const { return D; }
    double danger_radius() const { return 2.0 * D; }
};

/// Throws ConfigError naming the violated constraint
/// (n >= 1, D > 0, Dmax > 7 D, 3 D <= launch_threshold <= Dmax - 4 D).
void validate(const Params& p);

struct RobotInfo {
    Ident ident{0};
    bool light{false};
    bool alive{true};
    bool launched{false};

    constexpr bool operator==(const RobotInfo&) const = default;
};

struct RobotState {
    Point2 loc{};
    RobotInfo info{};

    constexpr bool operator==(const RobotState&) const = default;
};

struct Configuration {
    std::vector<RobotState> robots;

    std::size_t size() const { return robots.size(); }
    RobotState& operator[](std::size_t i) { return robots[i]; }
    const RobotState& operator[](std::size_t i) const { return robots[i]; }

    bool operator==(const Configuration&) const = default;
};

/// Robot of the observation, expressed in the observer's local frame.
struct ObservedRobot {
    Point2 loc{};
    RobotInfo info{};

    constexpr bool operator==(const ObservedRobot&) const = default;
};

/// What a robot perceives: its own info and the alive launched robots within
/// Dmax, listed in ascending identifier order. The observer sits at the origin.
struct Observation {
    RobotInfo self{};
    std::vector<ObservedRobot> others;
};

/// Output of the robogram: destination in the local frame and the new light.
struct Action {
    Point2 destination{};
    bool light{false};
};

using Robogram = std::function<Action(const Observation&)>;

/// The environment's per-round choices.
struct DemonicAction {
    /// frames[g] maps robot g's global location to the origin.
    std::vector<Frame> frames;
    /// Displacement of the companion, norm <= D.
    Point2 companion_move{};
};

struct StepEvents {
    std::vector<Ident> deaths;
    std::optional<Ident> launched;
    bool premise_ok{true};  ///< some robot was still waiting at base before the step

    bool operator==(const StepEvents&) const = default;
};

bool is_active_relay(const RobotInfo& info);

bool has_unlaunched(const Configuration& cf);

bool visible(const Params& p, const RobotState& observer, const RobotState& other);

/// Observation of robot `g`, computed through `frame` (which must send g's
/// location to the origin).
Observation obs_from_config(const Params& p, const Configuration& cf, Ident g, const Frame& frame);

/// One synchronous Look-Compute-Move round. Throws ModelViolation if the
/// demonic action is malformed or the robogram asks for a move longer than D.
Configuration round(const Params& p, const Robogram& rbg, const DemonicAction& da,
                    const Configuration& cf);

/// Same as above, processing robots in the given order (a permutation of
/// 0..n-1). The result does not depend on the order.
Configuration round(const Params& p, const Robogram& rbg, const DemonicAction& da,
                    const Configuration& cf, std::span<const std::size_t> order);

/// Same as `round`, splitting robots over `threads` worker threads.
Configuration round_parallel(const Params& p, const Robogram& rbg, const DemonicAction& da,
                             const Configuration& cf, unsigned threads);

/// Withdraws every launched alive relay that is within D of a lower
/// identifier, or has no lower identifier within Dmax. Decided on one
/// snapshot, applied at once.
std::pair<Configuration, std::vector<Ident>> apply_withdrawals(const Params& p,
                                                               const Configuration& cf);

/// Launches the lowest waiting robot when every alive launched robot is
/// farther than launch_threshold from the base.
std::pair<Configuration, std::optional<Ident>> apply_launch(const Params& p,
                                                            const Configuration& cf);

std::pair<Configuration, StepEvents> step(const Params& p, const Robogram& rbg,
                                          const DemonicAction& da, const Configuration& cf);

}  // namespace lifeline
