#include "lifeline/trace.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "lifeline/errors.hpp"
#include "lifeline/scenario.hpp"

namespace lifeline {

using nlohmann::json;

namespace {

json record_to_json(const TraceRecord& rec) {
    json robots = json::array();
    for (const RobotState& s : rec.cf.robots) {
        robots.push_back({{"ident", s.info.ident},
                          {"x", s.loc.x},
                          {"y", s.loc.y},
                          {"light", s.info.light},
                          {"alive", s.info.alive},
                          {"launched", s.info.launched}});
    }
    json events;
    events["deaths"] = rec.events.deaths;
    events["launched"] = rec.events.launched ? json(*rec.events.launched) : json(nullptr);
    events["premise_ok"] = rec.events.premise_ok;
    return {{"round", rec.round}, {"robots", std::move(robots)}, {"events", std::move(events)}};
}

TraceRecord record_from_json(const json& j) {
    TraceRecord rec;
    rec.round = j.at("round").get<std::size_t>();
    for (const json& r : j.at("robots")) {
        RobotState s;
        s.info.ident = r.at("ident").get<Ident>();
        s.loc = {r.at("x").get<double>(), r.at("y").get<double>()};
        s.info.light = r.at("light").get<bool>();
        s.info.alive = r.at("alive").get<bool>();
        s.info.launched = r.at("launched").get<bool>();
        rec.cf.robots.push_back(s);
    }
    const json& ev = j.at("events");
    rec.events.deaths = ev.at("deaths").get<std::vector<Ident>>();
    if (!ev.at("launched").is_null()) {
        rec.events.launched = ev.at("launched").get<Ident>();
    }
    rec.events.premise_ok = ev.at("premise_ok").get<bool>();
    return rec;
}

}  // namespace

TraceWriter::TraceWriter(std::ostream& out, const ScenarioConfig& config) : out_(out) {
    json header{{"header", {{"version", kVersion}, {"config", config_to_json(config)}}}};
    out_ << header.dump() << '\n';
}

void TraceWriter::write(const TraceRecord& rec) {
    out_ << record_to_json(rec).dump() << '\n';
    ++count_;
}

void TraceWriter::finish(const std::optional<std::string>& fault) {
    if (finished_) {
        return;
    }
    json footer{{"footer", {{"records", count_}, {"fault", fault ? json(*fault) : json(nullptr)}}}};
    out_ << footer.dump() << '\n';
    out_.flush();
    finished_ = true;
}

void write_trace(std::ostream& out, const Trace& t) {
    TraceWriter w(out, t.config);
    for (const TraceRecord& rec : t.records) {
        w.write(rec);
    }
    w.finish(t.fault);
}

Trace read_trace(std::istream& in) {
    Trace t;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    bool have_footer = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        if (have_footer) {
            throw ParseError("line " + std::to_string(lineno) + ": content after footer");
        }
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
        try {
            if (!have_header) {
                const json& h = j.at("header");
                t.version = h.at("version").get<std::string>();
                t.config = config_from_json(h.at("config"));
                have_header = true;
            } else if (j.contains("footer")) {
                const json& f = j.at("footer");
                if (f.at("records").get<std::size_t>() != t.records.size()) {
                    throw ParseError("footer record count does not match the trace");
                }
                if (!f.at("fault").is_null()) {
                    t.fault = f.at("fault").get<std::string>();
                }
                have_footer = true;
            } else {
                TraceRecord rec = record_from_json(j);
                if (rec.round != t.records.size()) {
                    throw ParseError("round " + std::to_string(rec.round) + " out of sequence");
                }
                if (rec.cf.size() != t.config.params.n) {
                    throw ParseError("round " + std::to_string(rec.round) + " lists " +
                                     std::to_string(rec.cf.size()) + " robots, expected " +
                                     std::to_string(t.config.params.n));
                }
                t.records.push_back(std::move(rec));
            }
        } catch (const json::exception& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const ConfigError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": bad header config: " + e.what());
        }
    }
    if (!have_header) {
        throw ParseError("trace has no header");
    }
    if (!have_footer) {
        throw ParseError("trace is truncated (no footer)");
    }
    if (t.records.empty()) {
        throw ParseError("trace has no records");
    }
    if (t.records.front().cf != config_init(t.config.params)) {
        throw ParseError("record 0 is not the initial configuration");
    }
    return t;
}

Trace read_trace_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open trace file '" + path + "'");
    }
    return read_trace(in);
}

ExecutionReport check_execution(const Trace& t) {
    ExecutionChecker checker(t.config.params);
    if (t.records.empty()) {
        return checker.report();
    }
    checker.observe_initial(t.records.front().cf);
    for (std::size_t i = 1; i < t.records.size(); ++i) {
        checker.observe_step(t.records[i].cf, t.records[i].events);
    }
    if (t.fault) {
        checker.observe_fault(t.records.size(), *t.fault);
    }
    return checker.report();
}

}  // namespace lifeline
