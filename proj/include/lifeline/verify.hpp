#pragma once
/**
 * @file verify.hpp
 * @brief Executable invariants, per configuration and across one step.
 *
 * Per configuration:
 *   no_collision_conf      no two launched alive robots share a location;
 *   path_conf              every alive robot but the companion sees an alive
 *                          launched robot of lower identifier within Dmax;
 *   exists_at_less_than_Dp if all lower neighbours of a robot have their
 *                          light on, one of them is within Dp.
 * Across a step:
 *   executed_means_light_on, executioner_means_light_off, speed bound.
 *
 * The correctness statement only holds while robots remain at the base, so
 * once `exists_at_base` has failed, later findings are downgraded to warnings.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lifeline/model.hpp"

namespace lifeline {

enum class ViolationKind {
    no_collision,
    near_collision,
    path_conf,
    exists_at_less_than_dp,
    executed_means_light_on,
    executioner_means_light_off,
    speed_bound,
    trace_consistency,
    protocol_fault,
};

std::string_view kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind{};
    std::size_t round{0};
    std::vector<Ident> witnesses;
    std::string detail;
    bool warning{false};

    bool operator==(const Violation&) const = default;
};

std::vector<Violation> no_collision_conf(const Configuration& cf, std::size_t round = 0);

std::vector<Violation> path_conf(const Params& p, const Configuration& cf, std::size_t round = 0);

std::vector<Violation> exists_at_less_than_dp(const Params& p, const Configuration& cf,
                                              std::size_t round = 0);

bool exists_at_base(const Configuration& cf);

/// Checks one step cf -> cf2 that withdrew `deaths`. `round` is the index of cf2.
/// Throws std::invalid_argument on configurations of different sizes.
std::vector<Violation> check_transition(const Params& p, const Configuration& cf,
                                        const Configuration& cf2, const std::vector<Ident>& deaths,
                                        std::size_t round = 0);

/// Shortest (in hops) life line from the base to the companion over alive
/// launched robots. The base is the implicit first node; the returned list
/// holds robot identifiers and ends with the companion (0).
std::optional<std::vector<Ident>> visibility_path(const Params& p, const Configuration& cf);

/// Alive launched robots with no chain of visibility to the base.
std::vector<Ident> unreachable_from_base(const Params& p, const Configuration& cf);

struct ExecutionReport {
    std::size_t rounds_checked{0};  ///< configurations examined
    std::vector<Violation> violations;
    std::vector<std::size_t> premise_failures;

    std::size_t failure_count() const;
    std::size_t warning_count() const;
    bool passed() const { return failure_count() == 0; }
    std::size_t count(ViolationKind k, bool include_warnings = false) const;
};

/// Incremental checker; feeding a trace record by record gives the same
/// report as check_execution on the whole trace.
class ExecutionChecker {
public:
    explicit ExecutionChecker(Params p);

    void observe_initial(const Configuration& cf);
    void observe_step(const Configuration& next, const StepEvents& events);
    /// Records a fault that stopped the execution before configuration `round`.
    void observe_fault(std::size_t round, std::string detail);

    const ExecutionReport& report() const { return report_; }
    /// True once some configuration had no robot left at the base.
    bool premise_failed() const { return first_premise_failure_.has_value(); }

private:
    void add(std::vector<Violation> found);
    void check_configuration(const Configuration& cf);

    Params params_;
    std::optional<Configuration> last_;
    std::size_t round_{0};
    std::optional<std::size_t> first_premise_failure_;
    ExecutionReport report_;
};

}  // namespace lifeline
