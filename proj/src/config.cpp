#include "lifeline/config.hpp"

#include <fstream>
#include <set>

#include "lifeline/errors.hpp"

namespace lifeline {

using nlohmann::json;

namespace {

Point2 point_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError(std::string(what) + " must be a [x, y] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json point_to_json(const Point2& p) { return json::array({p.x, p.y}); }

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key '") + key + "' has the wrong type");
    }
}

TrajectoryKind trajectory_from_json(const json& j) {
    if (j.is_string()) {
        return trajectory_from_json(json{{"kind", j}});
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        throw ConfigError("trajectory must be an object with a string 'kind'");
    }
    const std::string kind = j["kind"];
    if (kind == "random_walk") {
        return RandomWalk{};
    }
    if (kind == "flee") {
        return Flee{j.contains("direction") ? point_from_json(j["direction"], "trajectory.direction")
                                            : Point2{1.0, 0.0}};
    }
    if (kind == "shrink") {
        Shrink s;
        if (j.contains("direction")) {
            s.direction = point_from_json(j["direction"], "trajectory.direction");
        }
        s.outbound_rounds = get_or<std::size_t>(j, "outbound_rounds", 0);
        return s;
    }
    if (kind == "waypoints") {
        Waypoints w;
        if (!j.contains("points") || !j["points"].is_array()) {
            throw ConfigError("waypoints trajectory needs a 'points' array");
        }
        for (const json& p : j["points"]) {
            w.points.push_back(point_from_json(p, "trajectory.points[]"));
        }
        w.loop = get_or<bool>(j, "loop", false);
        return w;
    }
    if (kind == "replay") {
        Replay r;
        if (!j.contains("displacements") || !j["displacements"].is_array()) {
            throw ConfigError("replay trajectory needs a 'displacements' array");
        }
        for (const json& p : j["displacements"]) {
            r.displacements.push_back(point_from_json(p, "trajectory.displacements[]"));
        }
        return r;
    }
    throw ConfigError("unknown trajectory kind '" + kind +
                      "' (random_walk | flee | shrink | waypoints | replay)");
}

json trajectory_to_json(const TrajectoryKind& k) {
    json j;
    j["kind"] = std::string(trajectory_name(k));
    if (auto* f = std::get_if<Flee>(&k)) {
        j["direction"] = point_to_json(f->direction);
    } else if (auto* s = std::get_if<Shrink>(&k)) {
        j["direction"] = point_to_json(s->direction);
        j["outbound_rounds"] = s->outbound_rounds;
    } else if (auto* w = std::get_if<Waypoints>(&k)) {
        j["points"] = json::array();
        for (const Point2& p : w->points) {
            j["points"].push_back(point_to_json(p));
        }
        j["loop"] = w->loop;
    } else if (auto* r = std::get_if<Replay>(&k)) {
        j["displacements"] = json::array();
        for (const Point2& p : r->displacements) {
            j["displacements"].push_back(point_to_json(p));
        }
    }
    return j;
}

}  // namespace

ScenarioConfig config_from_json(const json& j) {
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    static const std::set<std::string> known{"n",      "D",         "Dmax",       "launch_threshold",
                                             "base",   "rounds",    "seed",       "frame_seed",
                                             "frames", "protocol",  "trajectory"};
    for (const auto& [key, _] : j.items()) {
        if (!known.contains(key)) {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    ScenarioConfig c;
    c.params.n = get_or<std::size_t>(j, "n", c.params.n);
    c.params.D = get_or<double>(j, "D", c.params.D);
    c.params.Dmax = get_or<double>(j, "Dmax", c.params.Dmax);
    c.params.launch_threshold = get_or<double>(j, "launch_threshold", c.params.launch_threshold);
    if (j.contains("base")) {
        c.params.base = point_from_json(j["base"], "base");
    }
    c.rounds = get_or<std::size_t>(j, "rounds", c.rounds);
    c.seed = get_or<std::uint64_t>(j, "seed", c.seed);
    if (j.contains("frame_seed") && !j["frame_seed"].is_null()) {
        c.frame_seed = get_or<std::uint64_t>(j, "frame_seed", 0);
    }
    if (j.contains("frames")) {
        c.frames = parse_frame_policy(get_or<std::string>(j, "frames", ""));
    }
    c.protocol = get_or<std::string>(j, "protocol", c.protocol);
    if (j.contains("trajectory")) {
        c.trajectory = trajectory_from_json(j["trajectory"]);
    }
    validate(c.params);
    return c;
}

json config_to_json(const ScenarioConfig& c) {
    json j;
    j["n"] = c.params.n;
    j["D"] = c.params.D;
    j["Dmax"] = c.params.Dmax;
    j["launch_threshold"] = c.params.launch_threshold;
    j["base"] = point_to_json(c.params.base);
    j["rounds"] = c.rounds;
    j["seed"] = c.seed;
    if (c.frame_seed) {
        j["frame_seed"] = *c.frame_seed;
    }
    j["frames"] = std::string(frame_policy_name(c.frames));
    j["protocol"] = c.protocol;
    j["trajectory"] = trajectory_to_json(c.trajectory);
    return j;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open config file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError("malformed config '" + path + "': " + e.what());
    }
    return config_from_json(j);
}

}  // namespace lifeline
