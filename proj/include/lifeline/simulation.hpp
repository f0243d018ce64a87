#pragma once
/**
 * @file simulation.hpp
 * @brief Closed-loop driver: scenario + protocol -> checked execution.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lifeline/config.hpp"
#include "lifeline/protocol.hpp"
#include "lifeline/scenario.hpp"
#include "lifeline/trace.hpp"
#include "lifeline/verify.hpp"

namespace lifeline {

class Simulation {
public:
    /// Resolves the protocol by name; throws ConfigError if unknown.
    explicit Simulation(const ScenarioConfig& config);
    Simulation(const ScenarioConfig& config, ProtocolFns fns);

    const ScenarioConfig& config() const { return config_; }
    const Configuration& configuration() const { return cf_; }
    std::size_t round() const { return round_; }

    /// The demon's choices for the next round (advances the random streams).
    DemonicAction next_action();

    /// Runs one step. Throws ProtocolFault / ModelViolation; the simulation
    /// is left unchanged in that case.
    StepEvents advance();

private:
    ScenarioConfig config_;
    Robogram robogram_;
    Trajectory trajectory_;
    Rng companion_rng_;
    Rng frame_rng_;
    Configuration cf_;
    std::size_t round_{0};
};

struct RunOptions {
    bool keep_trace{true};
    /// Stop once no failure can be reported any more (premise gone).
    bool stop_after_premise_failure{false};
    bool stop_at_first_failure{false};
    /// Called for every record, including record 0.
    std::function<void(const TraceRecord&)> on_record;
};

struct RunResult {
    Trace trace;  ///< records only if keep_trace
    ExecutionReport report;
    std::optional<std::string> fault;
    std::size_t rounds_run{0};
};

RunResult run_scenario(const ScenarioConfig& config, const RunOptions& opts = {});
RunResult run_scenario(const ScenarioConfig& config, const ProtocolFns& fns, const RunOptions& opts = {});

// Fuzzing --------------------------------------------------------------------

struct FuzzOptions {
    std::size_t count{100};
    std::uint64_t seed{0};
    unsigned jobs{1};
    /// Cycle through random_walk, flee, shrink and waypoints; otherwise keep
    /// the template's kind and only randomize its parameters.
    bool vary_trajectory{true};
    bool vary_n{true};
    /// Alternate identity and random frames; otherwise keep the template's.
    bool vary_frames{true};
    bool stop_after_premise_failure{true};
    /// Stop scheduling scenarios after the first failure.
    bool stop_at_first_failure{true};
    /// Optional protocol override (defaults to the template's).
    std::optional<ProtocolFactory> protocol;
};

/// Scenario `index` of a fuzz campaign (pure function of its arguments).
ScenarioConfig fuzz_scenario(const ScenarioConfig& templ, std::uint64_t seed, std::size_t index,
                             const FuzzOptions& opts);

struct ScenarioOutcome {
    std::size_t index{0};
    std::size_t failures{0};
    std::size_t warnings{0};
    std::size_t rounds_run{0};
    std::optional<ViolationKind> first_kind;
};

struct FuzzResult {
    std::size_t scenarios_run{0};
    std::vector<ScenarioOutcome> outcomes;  ///< in scenario order
    std::optional<std::size_t> first_failure;
    std::optional<ScenarioConfig> failing_config;
    std::optional<ExecutionReport> failing_report;
};

FuzzResult fuzz(const ScenarioConfig& templ, const FuzzOptions& opts);

}  // namespace lifeline
