#pragma once
/**
 * @file config.hpp
 * @brief Scenario configuration and its JSON form.
 *
 * Example document (every key optional; defaults shown):
 *
 *   {
 *     "n": 50, "D": 1.0, "Dmax": 7.5, "launch_threshold": 3.5, "base": [0, 0],
 *     "rounds": 1000, "seed": 0,
 *     "trajectory": {"kind": "random_walk"},
 *     "frames": "identity",
 *     "protocol": "sample"
 *   }
 *
 * Trajectory forms:
 *   {"kind": "random_walk"}
 *   {"kind": "flee", "direction": [1, 0]}
 *   {"kind": "shrink", "direction": [1, 0], "outbound_rounds": 0}
 *   {"kind": "waypoints", "points": [[x, y], ...], "loop": false}
 *   {"kind": "replay", "displacements": [[dx, dy], ...]}
 *
 * An optional "frame_seed" overrides the frame stream derived from "seed".
 */

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lifeline/model.hpp"
#include "lifeline/scenario.hpp"

namespace lifeline {

struct ScenarioConfig {
    Params params{50, 1.0, 7.5, 3.5, {}};
    std::size_t rounds{1000};
    std::uint64_t seed{0};
    std::optional<std::uint64_t> frame_seed;
    TrajectoryKind trajectory{RandomWalk{}};
    FramePolicy frames{FramePolicy::identity};
    std::string protocol{"sample"};

    std::uint64_t companion_stream_seed() const { return derive_seed(seed, 1); }
    std::uint64_t frame_stream_seed() const { return frame_seed ? *frame_seed : derive_seed(seed, 2); }
};

/// Parses and validates (Params constraints included). Throws ConfigError.
ScenarioConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const ScenarioConfig& c);

/// Reads a config file. Throws ConfigError (invalid content) or ParseError
/// (unreadable file or malformed JSON).
ScenarioConfig load_config(const std::string& path);

}  // namespace lifeline
