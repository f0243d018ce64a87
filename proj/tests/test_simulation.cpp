#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "lifeline/errors.hpp"
#include "lifeline/simulation.hpp"

using namespace lifeline;

namespace {

bool same_outcomes(const FuzzResult& a, const FuzzResult& b) {
    if (a.outcomes.size() != b.outcomes.size() || a.scenarios_run != b.scenarios_run ||
        a.first_failure != b.first_failure) {
        return false;
    }
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) {
        const ScenarioOutcome& x = a.outcomes[i];
        const ScenarioOutcome& y = b.outcomes[i];
        if (x.index != y.index || x.failures != y.failures || x.warnings != y.warnings ||
            x.rounds_run != y.rounds_run || x.first_kind != y.first_kind) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("simulation") {
    TEST_CASE("long random walk run is clean") {
        ScenarioConfig c;
        c.params.n = 400;
        c.rounds = 1000;
        c.seed = 11;
        c.frames = FramePolicy::random_isometry;
        const RunResult r = run_scenario(c);
        CHECK_FALSE(r.fault.has_value());
        CHECK(r.rounds_run == 1000);
        CHECK(r.trace.records.size() == 1001);
        CHECK(r.report.rounds_checked == 1001);
        CHECK(r.report.violations.empty());
        CHECK(r.report.premise_failures.empty());
    }

    TEST_CASE("runs are deterministic") {
        ScenarioConfig c;
        c.params.n = 30;
        c.rounds = 300;
        c.seed = 5;
        c.frames = FramePolicy::random_isometry;
        c.trajectory = Flee{{0.3, -1}};
        const RunResult a = run_scenario(c);
        const RunResult b = run_scenario(c);
        CHECK(a.trace.records == b.trace.records);
        CHECK(a.report.violations == b.report.violations);
        c.seed = 6;
        const RunResult d = run_scenario(c);
        CHECK_FALSE(d.trace.records == a.trace.records);
    }

    TEST_CASE("record 0 is the initial configuration and events are consistent") {
        ScenarioConfig c;
        c.params.n = 20;
        c.rounds = 200;
        c.trajectory = Flee{{1, 0}};
        const RunResult r = run_scenario(c);
        CHECK(r.trace.records.front().cf == config_init(c.params));
        for (std::size_t i = 1; i < r.trace.records.size(); ++i) {
            const TraceRecord& prev = r.trace.records[i - 1];
            const TraceRecord& rec = r.trace.records[i];
            CHECK(rec.round == i);
            for (Ident d : rec.events.deaths) {
                CHECK(prev.cf[d].info.alive);
                CHECK_FALSE(rec.cf[d].info.alive);
            }
            if (rec.events.launched) {
                CHECK_FALSE(prev.cf[*rec.events.launched].info.launched);
                CHECK(rec.cf[*rec.events.launched].info.launched);
            }
        }
    }

    TEST_CASE("stepping by hand matches run_scenario") {
        ScenarioConfig c;
        c.params.n = 15;
        c.rounds = 100;
        c.seed = 9;
        c.frames = FramePolicy::random_isometry;
        const RunResult r = run_scenario(c);
        Simulation sim(c);
        CHECK(sim.configuration() == r.trace.records[0].cf);
        for (std::size_t i = 1; i <= c.rounds; ++i) {
            const StepEvents ev = sim.advance();
            CHECK(sim.round() == i);
            CHECK(ev == r.trace.records[i].events);
            CHECK(sim.configuration() == r.trace.records[i].cf);
        }
    }

    TEST_CASE("unknown protocol is a configuration error") {
        ScenarioConfig c;
        c.protocol = "nope";
        CHECK_THROWS_AS(Simulation{c}, ConfigError);
    }

    TEST_CASE("on_record sees every record and keep_trace can be off") {
        ScenarioConfig c;
        c.params.n = 10;
        c.rounds = 40;
        std::size_t seen = 0;
        RunOptions opts;
        opts.keep_trace = false;
        opts.on_record = [&](const TraceRecord& rec) { CHECK(rec.round == seen++); };
        const RunResult r = run_scenario(c, opts);
        CHECK(seen == 41);
        CHECK(r.trace.records.empty());
        CHECK(r.report.rounds_checked == 41);
    }

    TEST_CASE("broken protocol is caught by the checker") {
        ScenarioConfig c;
        c.params.n = 30;
        c.rounds = 400;
        c.protocol = "always_move";
        c.trajectory = Shrink{{1, 0}, 100};
        const RunResult r = run_scenario(c);
        CHECK(r.report.count(ViolationKind::executed_means_light_on) > 0);
    }

    TEST_CASE("fuzz with zero scenarios") {
        ScenarioConfig c;
        FuzzOptions o;
        o.count = 0;
        const FuzzResult f = fuzz(c, o);
        CHECK(f.scenarios_run == 0);
        CHECK(f.outcomes.empty());
        CHECK_FALSE(f.first_failure.has_value());
    }

    TEST_CASE("fuzz scenarios are a pure function of their inputs") {
        ScenarioConfig c;
        c.rounds = 100;
        FuzzOptions o;
        std::set<std::string> kinds;
        for (std::size_t i = 0; i < 12; ++i) {
            const ScenarioConfig a = fuzz_scenario(c, 4, i, o);
            const ScenarioConfig b = fuzz_scenario(c, 4, i, o);
            CHECK(config_to_json(a) == config_to_json(b));
            CHECK_NOTHROW(config_from_json(config_to_json(a)));
            kinds.insert(std::string(trajectory_name(a.trajectory)));
        }
        CHECK(kinds.size() >= 3);
        CHECK(config_to_json(fuzz_scenario(c, 4, 0, o)) != config_to_json(fuzz_scenario(c, 5, 0, o)));

        o.vary_trajectory = false;
        o.vary_frames = false;
        c.trajectory = Flee{{0, 1}};
        for (std::size_t i = 0; i < 6; ++i) {
            const ScenarioConfig a = fuzz_scenario(c, 4, i, o);
            CHECK(std::holds_alternative<Flee>(a.trajectory));
            CHECK(a.frames == c.frames);
        }
    }

    TEST_CASE("parallel fuzz equals sequential fuzz") {
        ScenarioConfig c;
        c.rounds = 150;
        FuzzOptions o;
        o.count = 16;
        o.seed = 21;
        o.jobs = 1;
        const FuzzResult seq = fuzz(c, o);
        o.jobs = 4;
        const FuzzResult par = fuzz(c, o);
        CHECK(seq.scenarios_run == 16);
        CHECK(same_outcomes(seq, par));
        CHECK_FALSE(seq.first_failure.has_value());
    }

    TEST_CASE("fuzz reports the first failing scenario") {
        ScenarioConfig c;
        c.rounds = 300;
        c.protocol = "always_move";
        FuzzOptions o;
        o.count = 8;
        o.seed = 2;
        const FuzzResult f = fuzz(c, o);
        REQUIRE(f.first_failure.has_value());
        REQUIRE(f.failing_config.has_value());
        CHECK(f.failing_config->protocol == "always_move");
        CHECK(config_to_json(*f.failing_config) == config_to_json(fuzz_scenario(c, 2, *f.first_failure, o)));
    }
}
