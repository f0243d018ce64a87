#include "lifeline/scenario.hpp"

#include <numbers>

#include "lifeline/errors.hpp"

namespace lifeline {

namespace {

Point2 clamp_norm(const Point2& v, double max_norm) {
    const double n = v.norm();
    if (n <= max_norm) {
        return v;
    }
    return v * (max_norm / n);
}

Point2 unit(const Point2& v) {
    const double n = v.norm();
    if (!(n > 0.0)) {
        return {1.0, 0.0};
    }
    return v * (1.0 / n);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = (~std::uint64_t{0}) - (~std::uint64_t{0}) % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
        x = engine_();
    }
    return x % bound;
}

std::string_view trajectory_name(const TrajectoryKind& k) {
    struct Namer {
        std::string_view operator()(const Waypoints&) const { return "waypoints"; }
        std::string_view operator()(const RandomWalk&) const { return "random_walk"; }
        std::string_view operator()(const Flee&) const { return "flee"; }
        std::string_view operator()(const Shrink&) const { return "shrink"; }
        std::string_view operator()(const Replay&) const { return "replay"; }
    };
    return std::visit(Namer{}, k);
}

Trajectory::Trajectory(TrajectoryKind kind) : kind_(std::move(kind)) {
    if (auto* f = std::get_if<Flee>(&kind_)) {
        f->direction = unit(f->direction);
    } else if (auto* s = std::get_if<Shrink>(&kind_)) {
        s->direction = unit(s->direction);
    }
}

Point2 Trajectory::next_move(const Params& p, const Point2& current, Rng& rng) {
    const double D = p.D;
    if (auto* w = std::get_if<Waypoints>(&kind_)) {
        if (w->points.empty()) {
            return kOrigin;
        }
        if (cursor_ >= w->points.size()) {
            if (!w->loop) {
                return kOrigin;
            }
            cursor_ = 0;
        }
        const Point2 target = w->points[cursor_];
        const Point2 next = move_toward(current, target, D);
        if (next == target) {
            ++cursor_;
        }
        return clamp_norm(next - current, D);
    }
    if (std::holds_alternative<RandomWalk>(kind_)) {
        const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const double length = rng.uniform(0.0, D);
        ++cursor_;
        return clamp_norm({length * std::cos(angle), length * std::sin(angle)}, D);
    }
    if (auto* f = std::get_if<Flee>(&kind_)) {
        ++cursor_;
        return clamp_norm(f->direction * D, D);
    }
    if (auto* s = std::get_if<Shrink>(&kind_)) {
        const std::size_t r = cursor_++;
        if (r < s->outbound_rounds) {
            return clamp_norm(s->direction * D, D);
        }
        return clamp_norm(move_toward(current, p.base, D) - current, D);
    }
    auto& replay = std::get<Replay>(kind_);
    if (cursor_ >= replay.displacements.size()) {
        return kOrigin;
    }
    return clamp_norm(replay.displacements[cursor_++], D);
}

std::string_view frame_policy_name(FramePolicy f) {
    return f == FramePolicy::identity ? "identity" : "random_isometry";
}

FramePolicy parse_frame_policy(std::string_view s) {
    if (s == "identity") {
        return FramePolicy::identity;
    }
    if (s == "random_isometry" || s == "random") {
        return FramePolicy::random_isometry;
    }
    throw ConfigError("unknown frame policy '" + std::string(s) + "' (identity | random_isometry)");
}

std::vector<Frame> next_frames(FramePolicy policy, const Configuration& cf, Rng& rng) {
    std::vector<Frame> frames;
    frames.reserve(cf.size());
    for (const RobotState& s : cf.robots) {
        Frame f;
        if (policy == FramePolicy::random_isometry) {
            f.rotation = rng.uniform(0.0, 2.0 * std::numbers::pi);
            f.reflect = rng.coin();
        }
        // Same arithmetic as frame_apply, so the robot lands exactly on the origin.
        const Point2 image = frame_apply(Frame{f.rotation, f.reflect, kOrigin}, s.loc);
        f.translation = -image;
        frames.push_back(f);
    }
    return frames;
}

Configuration config_init(const Params& p) {
    Configuration cf;
    cf.robots.reserve(p.n);
    for (std::size_t i = 0; i < p.n; ++i) {
        RobotState s;
        s.loc = p.base;
        s.info.ident = i;
        s.info.light = false;
        s.info.alive = true;
        s.info.launched = (i == kCompanion);
        cf.robots.push_back(s);
    }
    return cf;
}

}  // namespace lifeline
