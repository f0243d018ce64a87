#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "lifeline/errors.hpp"
#include "lifeline/simulation.hpp"
#include "lifeline/trace.hpp"

using namespace lifeline;

namespace {

ScenarioConfig small_config(std::size_t rounds = 60) {
    ScenarioConfig c;
    c.params.n = 12;
    c.rounds = rounds;
    c.seed = 3;
    c.frames = FramePolicy::random_isometry;
    return c;
}

std::string serialize(const Trace& t) {
    std::ostringstream os;
    write_trace(os, t);
    return os.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        out.push_back(line);
    }
    return out;
}

std::string join(const std::vector<std::string>& lines) {
    std::string s;
    for (const std::string& l : lines) {
        s += l;
        s += '\n';
    }
    return s;
}

Trace parse(const std::string& text) {
    std::istringstream is(text);
    return read_trace(is);
}

}  // namespace

TEST_SUITE("trace") {
    TEST_CASE("write and read give back the same records") {
        const RunResult r = run_scenario(small_config());
        const std::string text = serialize(r.trace);
        const Trace back = parse(text);
        CHECK(back.version == kVersion);
        REQUIRE(back.records.size() == r.trace.records.size());
        CHECK(back.records == r.trace.records);
        CHECK_FALSE(back.fault.has_value());
        CHECK(config_to_json(back.config) == config_to_json(r.trace.config));
        // Writing the parsed trace again is byte identical.
        CHECK(serialize(back) == text);
    }

    TEST_CASE("one record per configuration plus header and footer") {
        const RunResult r = run_scenario(small_config(25));
        const std::vector<std::string> lines = lines_of(serialize(r.trace));
        CHECK(lines.size() == 26 + 2);
        CHECK(lines.front().find("\"header\"") != std::string::npos);
        CHECK(lines.back().find("\"footer\"") != std::string::npos);
    }

    TEST_CASE("coordinates survive the text form exactly") {
        Trace t;
        t.config = small_config();
        t.config.params.n = 2;
        Configuration cf = config_init(t.config.params);
        t.records.push_back({0, cf, {}});
        cf[0].loc = {0.1 + 0.2, -1.0 / 3.0};
        cf[1].info.launched = true;
        cf[1].loc = {1e-300, 5e-324};
        t.records.push_back({1, cf, {{}, 1, true}});
        const Trace back = parse(serialize(t));
        REQUIRE(back.records.size() == 2);
        CHECK(back.records[1].cf == cf);
        CHECK(back.records[1].events.launched == std::optional<Ident>(1));
    }

    TEST_CASE("fault is stored in the footer") {
        Trace t;
        t.config = small_config();
        t.records.push_back({0, config_init(t.config.params), {}});
        t.fault = "robot 3 ran out of range";
        const Trace back = parse(serialize(t));
        REQUIRE(back.fault.has_value());
        CHECK(*back.fault == "robot 3 ran out of range");
    }

    TEST_CASE("malformed traces are rejected") {
        const RunResult r = run_scenario(small_config(10));
        const std::vector<std::string> lines = lines_of(serialize(r.trace));

        SUBCASE("missing footer") {
            std::vector<std::string> cut(lines.begin(), lines.end() - 1);
            CHECK_THROWS_AS(parse(join(cut)), ParseError);
        }
        SUBCASE("truncated in the middle") {
            std::vector<std::string> cut(lines.begin(), lines.begin() + 5);
            CHECK_THROWS_AS(parse(join(cut)), ParseError);
        }
        SUBCASE("partial last line") {
            std::string text = join(lines);
            text.resize(text.size() - 20);
            CHECK_THROWS_AS(parse(text), ParseError);
        }
        SUBCASE("record count mismatch") {
            std::vector<std::string> v = lines;
            v.erase(v.begin() + 3);
            CHECK_THROWS_AS(parse(join(v)), ParseError);
        }
        SUBCASE("missing header") {
            std::vector<std::string> v(lines.begin() + 1, lines.end());
            CHECK_THROWS_AS(parse(join(v)), ParseError);
        }
        SUBCASE("content after footer") {
            std::vector<std::string> v = lines;
            v.push_back(lines[1]);
            CHECK_THROWS_AS(parse(join(v)), ParseError);
        }
        SUBCASE("not json") {
            CHECK_THROWS_AS(parse("hello\n"), ParseError);
        }
        SUBCASE("empty") {
            CHECK_THROWS_AS(parse(""), ParseError);
        }
        SUBCASE("missing file") {
            CHECK_THROWS_AS(read_trace_file("/nonexistent/trace.jsonl"), ParseError);
        }
    }

    TEST_CASE("a teleport in a trace is a speed violation") {
        RunResult r = run_scenario(small_config(30));
        Trace t = r.trace;
        REQUIRE(check_execution(t).passed());
        t.records[20].cf[0].loc = t.records[20].cf[0].loc + Point2{5, 0};
        const ExecutionReport rep = check_execution(t);
        CHECK_FALSE(rep.passed());
        CHECK(rep.count(ViolationKind::speed_bound) >= 1);
    }

    TEST_CASE("check_execution matches incremental checking") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            ScenarioConfig c = small_config(200);
            c.seed = seed;
            c.trajectory = (seed % 2 == 0) ? TrajectoryKind{Flee{{1, 0.5}}} : TrajectoryKind{RandomWalk{}};
            const RunResult r = run_scenario(c);
            ExecutionChecker checker(c.params);
            checker.observe_initial(r.trace.records.front().cf);
            for (std::size_t i = 1; i < r.trace.records.size(); ++i) {
                checker.observe_step(r.trace.records[i].cf, r.trace.records[i].events);
            }
            const ExecutionReport whole = check_execution(r.trace);
            CHECK(whole.violations == checker.report().violations);
            CHECK(whole.premise_failures == checker.report().premise_failures);
            CHECK(whole.rounds_checked == r.trace.records.size());
            CHECK(whole.violations == r.report.violations);
        }
    }
}
