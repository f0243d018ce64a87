#pragma once
/**
 * @file protocol.hpp
 * @brief The parameterized protocol family and its sample member.
 *
 * A member of the family is given by three functions:
 *
 *   choose_target  : which lower-identifier neighbour to keep in range;
 *   choose_new_pos : where to go so that the target stays within Dp;
 *   move_to        : whether that destination is safe (nobody of lower
 *                    identifier within 2 D of it).
 *
 * `rbg_fnc` glues them: a safe move is taken with the light off, an unsafe
 * one is replaced by staying put with the light on (a warning that the robot
 * may withdraw next).
 *
 * `check_axioms` evaluates the eight clauses any member must satisfy on a
 * given observation, so that arbitrary implementations can be tested.
 */

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lifeline/model.hpp"

namespace lifeline {

struct ProtocolFns {
    std::function<ObservedRobot(const Observation&)> choose_target;
    std::function<Point2(const Observation&, const Point2&)> choose_new_pos;
    std::function<bool(const Observation&, const Point2&)> move_to;
};

/// The protocol template. Throws ProtocolFault when choose_target does.
Action rbg_fnc(const ProtocolFns& fns, const Observation& obs);

Robogram make_robogram(ProtocolFns fns);

// Sample member ------------------------------------------------------------

/// Decisions at the Dmax, Dp and 2 D boundaries are taken on the safe side
/// by this fraction of D, so that rounding in local frames cannot flip them.
inline constexpr double kBoundaryMargin = 1e-9;

inline double boundary_margin(const Params& p) { return kBoundaryMargin * p.D; }

/// Lowest identifier among eligible robots (alive, within Dmax, lower
/// identifier) with light off; failing that, among those within Dp; failing
/// that, among all eligible. Throws ProtocolFault if none is eligible.
ObservedRobot sample_choose_target(const Params& p, const Observation& obs);

/// Step of length D toward a target beyond Dp (minus margin), otherwise stay.
Point2 sample_choose_new_pos(const Params& p, const Observation& obs, const Point2& target);

/// False iff some lower-identifier robot is within 2 D (plus margin) of `dest`.
bool sample_move_to(const Params& p, const Observation& obs, const Point2& dest);

ProtocolFns sample_protocol(const Params& p);

// Deliberately faulty variants (negative controls) --------------------------

/// Picks the lowest eligible identifier regardless of lights.
ProtocolFns light_blind_protocol(const Params& p);
/// Chases with steps of 1.5 D.
ProtocolFns overlong_step_protocol(const Params& p);
/// Never refuses a move.
ProtocolFns always_move_protocol(const Params& p);

// Registry ------------------------------------------------------------------

using ProtocolFactory = std::function<ProtocolFns(const Params&)>;

/// Registers (or replaces) a protocol under `name`.
void register_protocol(std::string name, ProtocolFactory factory);

/// Built-ins: "sample", "light_blind", "overlong_step", "always_move".
std::optional<ProtocolFns> make_protocol(std::string_view name, const Params& p);

std::vector<std::string> protocol_names();

// Axiom checking ------------------------------------------------------------

enum class Clause : std::size_t {
    target_in_range = 0,
    target_alive,
    target_lower_ident,
    target_prefers_light_off,
    target_prefers_close,
    new_pos_bounds,
    move_true_clear,
    move_false_witness,
};

inline constexpr std::size_t kClauseCount = 8;

std::string_view clause_name(Clause c);

struct ClauseVerdict {
    bool holds{true};
    std::string counterexample;  ///< empty when the clause holds
};

struct AxiomReport {
    std::array<ClauseVerdict, kClauseCount> clauses{};

    bool all_hold() const;
    const ClauseVerdict& operator[](Clause c) const { return clauses[static_cast<std::size_t>(c)]; }
    /// First failing clause, if any.
    std::optional<Clause> first_failure() const;
};

/// Evaluates the eight clauses for the given functions on `obs`. The
/// "every other robot" clauses (4, 5, 7) range over the robots the protocol
/// is allowed to take into account: visible robots of lower identifier.
/// A fault raised by choose_target is reported as a failure of clause 1.
AxiomReport check_axioms(const Params& p, const ProtocolFns& fns, const Observation& obs);

/// True iff `o` is a robot choose_target may pick for observer `self`.
bool eligible(const Params& p, const RobotInfo& self, const ObservedRobot& o);

std::string describe(const Observation& obs);

}  // namespace lifeline
