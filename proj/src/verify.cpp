#include "lifeline/verify.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace lifeline {

namespace {

constexpr double kNearCollision = 1e-9;

bool launched_alive(const RobotState& s) { return s.info.launched && s.info.alive; }

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

bool contains(const std::vector<Ident>& v, Ident id) {
    return std::find(v.begin(), v.end(), id) != v.end();
}

}  // namespace

std::string_view kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::no_collision: return "no_collision_conf";
        case ViolationKind::near_collision: return "near_collision";
        case ViolationKind::path_conf: return "path_conf";
        case ViolationKind::exists_at_less_than_dp: return "exists_at_less_than_Dp";
        case ViolationKind::executed_means_light_on: return "executed_means_light_on";
        case ViolationKind::executioner_means_light_off: return "executioner_means_light_off";
        case ViolationKind::speed_bound: return "speed_bound";
        case ViolationKind::trace_consistency: return "trace_consistency";
        case ViolationKind::protocol_fault: return "protocol_fault";
    }
    return "unknown";
}

std::vector<Violation> no_collision_conf(const Configuration& cf, std::size_t round) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        if (!launched_alive(cf[i])) {
            continue;
        }
        for (std::size_t j = i + 1; j < cf.size(); ++j) {
            if (!launched_alive(cf[j])) {
                continue;
            }
            const double d = dist(cf[i].loc, cf[j].loc);
            if (d == 0.0) {
                out.push_back({ViolationKind::no_collision, round, {cf[i].info.ident, cf[j].info.ident},
                               "robots share a location", false});
            } else if (d < kNearCollision) {
                out.push_back({ViolationKind::near_collision, round, {cf[i].info.ident, cf[j].info.ident},
                               "robots are " + num(d) + " apart", true});
            }
        }
    }
    return out;
}

std::vector<Violation> path_conf(const Params& p, const Configuration& cf, std::size_t round) {
    std::vector<Violation> out;
    for (const RobotState& g : cf.robots) {
        if (!g.info.alive || g.info.ident == kCompanion) {
            continue;
        }
        const bool linked = std::any_of(cf.robots.begin(), cf.robots.end(), [&](const RobotState& o) {
            return launched_alive(o) && o.info.ident < g.info.ident && dist(g.loc, o.loc) <= p.Dmax;
        });
        if (!linked) {
            out.push_back({ViolationKind::path_conf, round, {g.info.ident},
                           "no alive launched robot of lower identifier within Dmax", false});
        }
    }
    return out;
}

std::vector<Violation> exists_at_less_than_dp(const Params& p, const Configuration& cf,
                                              std::size_t round) {
    std::vector<Violation> out;
    const double dp = p.pursuit_distance();
    for (const RobotState& r : cf.robots) {
        if (!launched_alive(r)) {
            continue;
        }
        bool any_neighbour = false;
        bool all_lit = true;
        bool one_close = false;
        for (const RobotState& o : cf.robots) {
            if (!launched_alive(o) || o.info.ident >= r.info.ident) {
                continue;
            }
            const double d = dist(r.loc, o.loc);
            if (d > p.Dmax) {
                continue;
            }
            any_neighbour = true;
            all_lit = all_lit && o.info.light;
            one_close = one_close || d <= dp;
        }
        if (any_neighbour && all_lit && !one_close) {
            out.push_back({ViolationKind::exists_at_less_than_dp, round, {r.info.ident},
                           "all lower neighbours have their light on and lie beyond Dp", false});
        }
    }
    return out;
}

bool exists_at_base(const Configuration& cf) { return has_unlaunched(cf); }

std::vector<Violation> check_transition(const Params& p, const Configuration& cf,
                                        const Configuration& cf2, const std::vector<Ident>& deaths,
                                        std::size_t round) {
    if (cf.size() != cf2.size()) {
        throw std::invalid_argument("configurations of different sizes: " + std::to_string(cf.size()) +
                                    " vs " + std::to_string(cf2.size()));
    }
    std::vector<Violation> out;
    const std::size_t n = cf.size();

    for (Ident r : deaths) {
        if (r >= n) {
            out.push_back({ViolationKind::trace_consistency, round, {},
                           "withdrawn identifier " + std::to_string(r) + " does not exist", false});
            continue;
        }
        if (!cf2[r].info.light) {
            out.push_back({ViolationKind::executed_means_light_on, round, {r},
                           "withdrawn robot had its light off", false});
        }
        // Executioners: lower robots within D of r after the moves.
        for (const RobotState& o : cf2.robots) {
            const bool was_alive = o.info.alive || contains(deaths, o.info.ident);
            if (!o.info.launched || !was_alive || o.info.ident >= r) {
                continue;
            }
            if (dist(o.loc, cf2[r].loc) <= p.D + kWithdrawalTolerance * p.D && o.info.light) {
                out.push_back({ViolationKind::executioner_means_light_off, round, {r, o.info.ident},
                               "robot causing the withdrawal has its light on", false});
            }
        }
    }

    for (std::size_t g = 0; g < n; ++g) {
        const double moved = dist(cf[g].loc, cf2[g].loc);
        if (!(moved <= p.D + kSpeedTolerance)) {
            out.push_back({ViolationKind::speed_bound, round, {cf[g].info.ident},
                           "moved " + num(moved) + " > D", false});
        }
        const bool died = cf[g].info.alive && !cf2[g].info.alive;
        if (died != contains(deaths, g) || (!cf[g].info.alive && cf2[g].info.alive) ||
            (cf[g].info.launched && !cf2[g].info.launched) || cf2[g].info.ident != g) {
            out.push_back({ViolationKind::trace_consistency, round, {g},
                           "alive/launched/ident flags inconsistent with the recorded events", false});
        }
    }
    return out;
}

std::optional<std::vector<Ident>> visibility_path(const Params& p, const Configuration& cf) {
    const std::size_t n = cf.size();
    const std::size_t base = n;
    constexpr std::size_t kNone = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(n + 1, kNone);
    std::vector<bool> seen(n + 1, false);
    auto loc = [&](std::size_t v) { return v == base ? p.base : cf[v].loc; };

    std::deque<std::size_t> queue{base};
    seen[base] = true;
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        for (std::size_t w = 0; w < n; ++w) {
            if (seen[w] || !launched_alive(cf[w]) || dist(loc(v), cf[w].loc) > p.Dmax) {
                continue;
            }
            seen[w] = true;
            parent[w] = v;
            queue.push_back(w);
        }
    }
    if (n == 0 || !seen[kCompanion]) {
        return std::nullopt;
    }
    std::vector<Ident> path;
    for (std::size_t v = kCompanion; v != base; v = parent[v]) {
        path.push_back(cf[v].info.ident);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Ident> unreachable_from_base(const Params& p, const Configuration& cf) {
    const std::size_t n = cf.size();
    std::vector<bool> seen(n, false);
    std::deque<Point2> frontier{p.base};
    while (!frontier.empty()) {
        const Point2 at = frontier.front();
        frontier.pop_front();
        for (std::size_t w = 0; w < n; ++w) {
            if (!seen[w] && launched_alive(cf[w]) && dist(at, cf[w].loc) <= p.Dmax) {
                seen[w] = true;
                frontier.push_back(cf[w].loc);
            }
        }
    }
    std::vector<Ident> out;
    for (std::size_t w = 0; w < n; ++w) {
        if (launched_alive(cf[w]) && !seen[w]) {
            out.push_back(cf[w].info.ident);
        }
    }
    return out;
}

std::size_t ExecutionReport::failure_count() const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [](const Violation& v) { return !v.warning; }));
}

std::size_t ExecutionReport::warning_count() const { return violations.size() - failure_count(); }

std::size_t ExecutionReport::count(ViolationKind k, bool include_warnings) const {
    return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(), [&](const Violation& v) {
        return v.kind == k && (include_warnings || !v.warning);
    }));
}

ExecutionChecker::ExecutionChecker(Params p) : params_(p) {}

void ExecutionChecker::add(std::vector<Violation> found) {
    const bool gated = first_premise_failure_ && round_ > *first_premise_failure_;
    for (Violation& v : found) {
        v.warning = v.warning || gated;
        report_.violations.push_back(std::move(v));
    }
}

void ExecutionChecker::check_configuration(const Configuration& cf) {
    add(no_collision_conf(cf, round_));
    add(path_conf(params_, cf, round_));
    add(exists_at_less_than_dp(params_, cf, round_));
    if (!exists_at_base(cf)) {
        report_.premise_failures.push_back(round_);
        if (!first_premise_failure_) {
            first_premise_failure_ = round_;
        }
    }
    ++report_.rounds_checked;
}

void ExecutionChecker::observe_initial(const Configuration& cf) {
    round_ = 0;
    check_configuration(cf);
    last_ = cf;
}

void ExecutionChecker::observe_step(const Configuration& next, const StepEvents& events) {
    if (!last_) {
        throw std::logic_error("observe_step before observe_initial");
    }
    ++round_;
    if (last_->size() != next.size()) {
        add({{ViolationKind::trace_consistency, round_, {}, "robot count changed", false}});
        last_ = next;
        return;
    }
    add(check_transition(params_, *last_, next, events.deaths, round_));
    check_configuration(next);
    last_ = next;
}

void ExecutionChecker::observe_fault(std::size_t round, std::string detail) {
    const std::size_t saved = round_;
    round_ = round;
    add({{ViolationKind::protocol_fault, round, {}, std::move(detail), false}});
    round_ = saved;
}

}  // namespace lifeline
