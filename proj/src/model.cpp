#include "lifeline/model.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "lifeline/errors.hpp"

namespace lifeline {

namespace {

std::string fmt_num(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// Result of processing robot g of cf; writes nothing shared.
RobotState next_state(const Params& p, const Robogram& rbg, const DemonicAction& da,
                      const Configuration& cf, std::size_t g) {
    const RobotState& cur = cf[g];
    RobotState out = cur;

    if (cur.info.ident == kCompanion) {
        if (da.companion_move.norm() > p.D + kSpeedTolerance || !da.companion_move.finite()) {
            throw ModelViolation("companion displacement longer than D: " +
                                 fmt_num(da.companion_move.norm()));
        }
        out.loc = cur.loc + da.companion_move;
        out.info.light = false;
        return out;
    }

    // Unlaunched and withdrawn robots are inactive: identity update.
    if (!is_active_relay(cur.info)) {
        return out;
    }

    const Frame& frame = da.frames[g];
    const Point2 local_self = frame_apply(frame, cur.loc);
    const double origin_tol = 1e-12 * std::max(1.0, cur.loc.norm());
    if (local_self.norm() > origin_tol) {
        throw ModelViolation("frame of robot " + std::to_string(g) +
                             " does not center it at the origin");
    }

    const Observation obs = obs_from_config(p, cf, g, frame);
    const Action act = rbg(obs);
    if (!act.destination.finite() || act.destination.norm() > p.D + kSpeedTolerance) {
        throw ModelViolation("robot " + std::to_string(g) + " requested a move of length " +
                             fmt_num(act.destination.norm()) + " > D");
    }
    out.loc = frame_apply(frame_inverse(frame), act.destination);
    out.info.light = act.light;
    return out;
}

void check_action_shape(const DemonicAction& da, const Configuration& cf) {
    if (da.frames.size() != cf.size()) {
        throw ModelViolation("demonic action has " + std::to_string(da.frames.size()) +
                             " frames for " + std::to_string(cf.size()) + " robots");
    }
}

}  // namespace

void validate(const Params& p) {
    if (p.n < 1) {
        throw ConfigError("n must be at least 1 (the companion)");
    }
    if (!(std::isfinite(p.D) && p.D > 0.0)) {
        throw ConfigError("D must be a finite positive number");
    }
    if (!std::isfinite(p.Dmax) || !std::isfinite(p.launch_threshold) || !p.base.finite()) {
        throw ConfigError("Dmax, launch_threshold and base must be finite");
    }
    if (!(p.Dmax > 7.0 * p.D)) {
        throw ConfigError("Dmax must be strictly greater than 7*D (Dmax=" + fmt_num(p.Dmax) +
                          ", 7*D=" + fmt_num(7.0 * p.D) + ")");
    }
    if (p.launch_threshold < 3.0 * p.D) {
        throw ConfigError("launch_threshold must be at least 3*D (launch_threshold=" +
                          fmt_num(p.launch_threshold) + ", 3*D=" + fmt_num(3.0 * p.D) + ")");
    }
    if (p.launch_threshold > p.Dmax - 4.0 * p.D) {
        throw ConfigError("launch_threshold must be at most Dmax-4*D (launch_threshold=" +
                          fmt_num(p.launch_threshold) + ", Dmax-4*D=" +
                          fmt_num(p.Dmax - 4.0 * p.D) + ")");
    }
}

bool is_active_relay(const RobotInfo& info) {
    return info.ident != kCompanion && info.launched && info.alive;
}

bool has_unlaunched(const Configuration& cf) {
    return std::any_of(cf.robots.begin(), cf.robots.end(),
                       [](const RobotState& s) { return !s.info.launched; });
}

bool visible(const Params& p, const RobotState& observer, const RobotState& other) {
    if (other.info.ident == observer.info.ident) {
        return false;
    }
    return other.info.alive && other.info.launched && dist(observer.loc, other.loc) <= p.Dmax;
}

Observation obs_from_config(const Params& p, const Configuration& cf, Ident g, const Frame& frame) {
    Observation obs;
    const RobotState& me = cf[g];
    obs.self = me.info;
    for (const RobotState& s : cf.robots) {
        if (visible(p, me, s)) {
            obs.others.push_back({frame_apply(frame, s.loc), s.info});
        }
    }
    return obs;
}

Configuration round(const Params& p, const Robogram& rbg, const DemonicAction& da,
                    const Configuration& cf) {
    std::vector<std::size_t> order(cf.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return round(p, rbg, da, cf, order);
}

Configuration round(const Params& p, const Robogram& rbg, const DemonicAction& da,
                    const Configuration& cf, std::span<const std::size_t> order) {
    check_action_shape(da, cf);
    if (order.size() != cf.size()) {
        throw ModelViolation("processing order is not a permutation of the robots");
    }
    Configuration next = cf;
    for (std::size_t g : order) {
        next[g] = next_state(p, rbg, da, cf, g);
    }
    return next;
}

Configuration round_parallel(const Params& p, const Robogram& rbg, const DemonicAction& da,
                             const Configuration& cf, unsigned threads) {
    check_action_shape(da, cf);
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cf.size())));
    if (threads <= 1) {
        return round(p, rbg, da, cf);
    }
    Configuration next = cf;
    std::vector<std::exception_ptr> errors(threads);
    {
        std::vector<std::jthread> workers;
        workers.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            workers.emplace_back([&, t] {
                try {
                    for (std::size_t g = t; g < cf.size(); g += threads) {
                        next[g] = next_state(p, rbg, da, cf, g);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return next;
}

std::pair<Configuration, std::vector<Ident>> apply_withdrawals(const Params& p,
                                                               const Configuration& cf) {
    std::vector<Ident> deaths;
    const double slack = kWithdrawalTolerance * p.D;
    for (const RobotState& r : cf.robots) {
        if (!is_active_relay(r.info)) {
            continue;
        }
        bool too_close = false;
        bool in_range = false;
        for (const RobotState& o : cf.robots) {
            if (!o.info.alive || !o.info.launched || o.info.ident >= r.info.ident) {
                continue;
            }
            const double d = dist(r.loc, o.loc);
            too_close = too_close || d <= p.D + slack;
            in_range = in_range || d <= p.Dmax + slack;
        }
        if (too_close || !in_range) {
            deaths.push_back(r.info.ident);
        }
    }
    Configuration next = cf;
    for (Ident id : deaths) {
        next[id].info.alive = false;
    }
    return {std::move(next), std::move(deaths)};
}

std::pair<Configuration, std::optional<Ident>> apply_launch(const Params& p,
                                                            const Configuration& cf) {
    double nearest = std::numeric_limits<double>::infinity();
    std::optional<Ident> waiting;
    for (const RobotState& s : cf.robots) {
        if (s.info.alive && s.info.launched) {
            nearest = std::min(nearest, dist(p.base, s.loc));
        }
        if (!s.info.launched && (!waiting || s.info.ident < *waiting)) {
            waiting = s.info.ident;
        }
    }
    if (!waiting || !(nearest > p.launch_threshold)) {
        return {cf, std::nullopt};
    }
    Configuration next = cf;
    next[*waiting].info.launched = true;
    next[*waiting].loc = p.base;
    return {std::move(next), waiting};
}

std::pair<Configuration, StepEvents> step(const Params& p, const Robogram& rbg,
                                          const DemonicAction& da, const Configuration& cf) {
    StepEvents ev;
    ev.premise_ok = has_unlaunched(cf);
    Configuration moved = round(p, rbg, da, cf);
    auto [survivors, deaths] = apply_withdrawals(p, moved);
    auto [launched_cf, launched] = apply_launch(p, survivors);
    ev.deaths = std::move(deaths);
    ev.launched = launched;
    return {std::move(launched_cf), std::move(ev)};
}

}  // namespace lifeline
