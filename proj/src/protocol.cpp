#include "lifeline/protocol.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lifeline/errors.hpp"

namespace lifeline {

namespace {

std::optional<ObservedRobot> min_ident(const std::vector<ObservedRobot>& robots,
                                       const std::function<bool(const ObservedRobot&)>& keep) {
    std::optional<ObservedRobot> best;
    for (const ObservedRobot& o : robots) {
        if (keep(o) && (!best || o.info.ident < best->info.ident)) {
            best = o;
        }
    }
    return best;
}

std::string robot_str(const ObservedRobot& o) {
    std::ostringstream os;
    os.precision(17);
    os << "ident " << o.info.ident << " at (" << o.loc.x << ", " << o.loc.y << ") light "
       << (o.info.light ? "on" : "off");
    return os.str();
}

struct Registry {
    std::mutex mu;
    std::map<std::string, ProtocolFactory, std::less<>> factories;

    Registry() {
        factories.emplace("sample", sample_protocol);
        factories.emplace("light_blind", light_blind_protocol);
        factories.emplace("overlong_step", overlong_step_protocol);
        factories.emplace("always_move", always_move_protocol);
    }
};

Registry& registry() {
    static Registry r;
    return r;
}

}  // namespace

Action rbg_fnc(const ProtocolFns& fns, const Observation& obs) {
    const ObservedRobot target = fns.choose_target(obs);
    const Point2 new_pos = fns.choose_new_pos(obs, target.loc);
    if (fns.move_to(obs, new_pos)) {
        return {new_pos, false};
    }
    return {kOrigin, true};
}

Robogram make_robogram(ProtocolFns fns) {
    return [fns = std::move(fns)](const Observation& obs) { return rbg_fnc(fns, obs); };
}

bool eligible(const Params& p, const RobotInfo& self, const ObservedRobot& o) {
    return o.info.alive && o.loc.norm() <= p.Dmax + boundary_margin(p) && o.info.ident < self.ident;
}

ObservedRobot sample_choose_target(const Params& p, const Observation& obs) {
    const double dp = p.pursuit_distance();
    auto in_v = [&](const ObservedRobot& o) { return eligible(p, obs.self, o); };
    if (auto t = min_ident(obs.others, [&](const ObservedRobot& o) { return in_v(o) && !o.info.light; })) {
        return *t;
    }
    if (auto t = min_ident(obs.others, [&](const ObservedRobot& o) { return in_v(o) && o.loc.norm() <= dp; })) {
        return *t;
    }
    if (auto t = min_ident(obs.others, in_v)) {
        return *t;
    }
    throw ProtocolFault("robot " + std::to_string(obs.self.ident) +
                        " sees no alive robot of lower identifier within Dmax");
}

Point2 sample_choose_new_pos(const Params& p, const Observation&, const Point2& target) {
    if (target.norm() > p.pursuit_distance() - boundary_margin(p)) {
        return move_toward(kOrigin, target, p.D);
    }
    return kOrigin;
}

bool sample_move_to(const Params& p, const Observation& obs, const Point2& dest) {
    const double danger = p.danger_radius() + boundary_margin(p);
    return std::none_of(obs.others.begin(), obs.others.end(), [&](const ObservedRobot& o) {
        return o.info.ident < obs.self.ident && dist(o.loc, dest) <= danger;
    });
}

ProtocolFns sample_protocol(const Params& p) {
    return {
        [p](const Observation& obs) { return sample_choose_target(p, obs); },
        [p](const Observation& obs, const Point2& t) { return sample_choose_new_pos(p, obs, t); },
        [p](const Observation& obs, const Point2& d) { return sample_move_to(p, obs, d); },
    };
}

ProtocolFns light_blind_protocol(const Params& p) {
    ProtocolFns fns = sample_protocol(p);
    fns.choose_target = [p](const Observation& obs) {
        auto t = min_ident(obs.others, [&](const ObservedRobot& o) { return eligible(p, obs.self, o); });
        if (!t) {
            throw ProtocolFault("robot " + std::to_string(obs.self.ident) + " has no eligible target");
        }
        return *t;
    };
    return fns;
}

ProtocolFns overlong_step_protocol(const Params& p) {
    ProtocolFns fns = sample_protocol(p);
    fns.choose_new_pos = [p](const Observation&, const Point2& target) {
        if (target.norm() > p.pursuit_distance() - boundary_margin(p)) {
            return move_toward(kOrigin, target, 1.5 * p.D);
        }
        return kOrigin;
    };
    return fns;
}

ProtocolFns always_move_protocol(const Params& p) {
    ProtocolFns fns = sample_protocol(p);
    fns.move_to = [](const Observation&, const Point2&) { return true; };
    return fns;
}

void register_protocol(std::string name, ProtocolFactory factory) {
    Registry& r = registry();
    std::lock_guard lock(r.mu);
    r.factories[std::move(name)] = std::move(factory);
}

std::optional<ProtocolFns> make_protocol(std::string_view name, const Params& p) {
    Registry& r = registry();
    std::lock_guard lock(r.mu);
    auto it = r.factories.find(name);
    if (it == r.factories.end()) {
        return std::nullopt;
    }
    return it->second(p);
}

std::vector<std::string> protocol_names() {
    Registry& r = registry();
    std::lock_guard lock(r.mu);
    std::vector<std::string> names;
    for (const auto& [name, _] : r.factories) {
        names.push_back(name);
    }
    return names;
}

std::string_view clause_name(Clause c) {
    switch (c) {
        case Clause::target_in_range: return "target_in_range";
        case Clause::target_alive: return "target_alive";
        case Clause::target_lower_ident: return "target_lower_ident";
        case Clause::target_prefers_light_off: return "target_prefers_light_off";
        case Clause::target_prefers_close: return "target_prefers_close";
        case Clause::new_pos_bounds: return "new_pos_bounds";
        case Clause::move_true_clear: return "move_true_clear";
        case Clause::move_false_witness: return "move_false_witness";
    }
    return "unknown";
}

bool AxiomReport::all_hold() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const ClauseVerdict& v) { return v.holds; });
}

std::optional<Clause> AxiomReport::first_failure() const {
    for (std::size_t i = 0; i < kClauseCount; ++i) {
        if (!clauses[i].holds) {
            return static_cast<Clause>(i);
        }
    }
    return std::nullopt;
}

AxiomReport check_axioms(const Params& p, const ProtocolFns& fns, const Observation& obs) {
    AxiomReport rep;
    auto fail = [&](Clause c, std::string why) {
        auto& v = rep.clauses[static_cast<std::size_t>(c)];
        v.holds = false;
        v.counterexample = std::string(clause_name(c)) + ": " + why;
    };

    ObservedRobot t;
    try {
        t = fns.choose_target(obs);
    } catch (const ProtocolFault& e) {
        fail(Clause::target_in_range, std::string("choose_target failed: ") + e.what());
        return rep;
    }
    const double dp = p.pursuit_distance();
    const double danger = p.danger_radius();
    const std::string tdesc = "target " + robot_str(t);

    // (1)..(3)
    if (std::find(obs.others.begin(), obs.others.end(), t) == obs.others.end()) {
        fail(Clause::target_in_range, tdesc + " is not part of the observation");
    }
    if (!t.info.alive) {
        fail(Clause::target_alive, tdesc + " is not alive");
    }
    if (!(t.info.ident < obs.self.ident)) {
        fail(Clause::target_lower_ident,
             tdesc + " is not below observer ident " + std::to_string(obs.self.ident));
    }

    // (4)(5) quantify over the robots the observer may follow.
    for (const ObservedRobot& o : obs.others) {
        if (!eligible(p, obs.self, o)) {
            continue;
        }
        if (t.info.light && !o.info.light && rep[Clause::target_prefers_light_off].holds) {
            fail(Clause::target_prefers_light_off, tdesc + " while " + robot_str(o) + " has light off");
        }
        if (t.info.light && t.loc.norm() > dp && !(o.loc.norm() > dp) &&
            rep[Clause::target_prefers_close].holds) {
            fail(Clause::target_prefers_close,
                 tdesc + " is beyond Dp while " + robot_str(o) + " is within Dp");
        }
    }

    // (6) travel bound uses the same tolerance as the engine's speed check.
    const Point2 np = fns.choose_new_pos(obs, t.loc);
    const double to_target = dist(np, t.loc);
    const double step = np.norm();
    if (!(to_target <= dp + kSpeedTolerance) || !(step <= p.D + kSpeedTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "new position (" << np.x << ", " << np.y << ") is " << to_target
           << " from the target and " << step << " from the observer";
        fail(Clause::new_pos_bounds, os.str());
    }

    // (7)(8)
    const bool m = fns.move_to(obs, np);
    if (m) {
        for (const ObservedRobot& o : obs.others) {
            if (o.info.ident < obs.self.ident && !(dist(np, o.loc) > danger)) {
                fail(Clause::move_true_clear, "move accepted although " + robot_str(o) +
                                                  " is within 2D of the destination");
                break;
            }
        }
    } else {
        const bool witness = std::any_of(obs.others.begin(), obs.others.end(), [&](const ObservedRobot& o) {
            return o.info.ident < obs.self.ident && dist(o.loc, np) <= danger + boundary_margin(p);
        });
        if (!witness) {
            fail(Clause::move_false_witness, "move refused with no lower robot within 2D of the destination");
        }
    }
    return rep;
}

std::string describe(const Observation& obs) {
    nlohmann::json j;
    j["self"] = {{"ident", obs.self.ident},
                 {"light", obs.self.light},
                 {"alive", obs.self.alive},
                 {"launched", obs.self.launched}};
    j["others"] = nlohmann::json::array();
    for (const ObservedRobot& o : obs.others) {
        j["others"].push_back({{"ident", o.info.ident},
                               {"x", o.loc.x},
                               {"y", o.loc.y},
                               {"light", o.info.light},
                               {"alive", o.info.alive},
                               {"launched", o.info.launched}});
    }
    return j.dump();
}

}  // namespace lifeline
