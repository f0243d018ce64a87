#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lifeline/protocol.hpp"
#include "lifeline/scenario.hpp"

namespace lifeline {

/// Random valid observation: 1..20 alive launched robots within Dmax of the
/// origin with distinct identifiers, at least one below the observer's.
/// Some radii are snapped to D, 2D or Dp to exercise the zone boundaries.
Observation random_observation(const Params& p, Rng& rng);

struct OracleResult {
    std::size_t samples{0};
    std::size_t failures{0};
    std::array<std::size_t, kClauseCount> clause_failures{};
    std::optional<Observation> first_counterexample;
    std::optional<AxiomReport> first_report;
};

/// Checks the axioms of `fns` on `samples` random observations.
OracleResult run_oracle(const Params& p, const ProtocolFns& fns, std::size_t samples, std::uint64_t seed);

}  // namespace lifeline
