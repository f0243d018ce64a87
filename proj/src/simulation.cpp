#include "lifeline/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numbers>
#include <thread>

#include "lifeline/errors.hpp"

namespace lifeline {

namespace {

ProtocolFns resolve_protocol(const ScenarioConfig& config) {
    auto fns = make_protocol(config.protocol, config.params);
    if (!fns) {
        std::string known;
        for (const auto& name : protocol_names()) {
            known += (known.empty() ? "" : ", ") + name;
        }
        throw ConfigError("unknown protocol '" + config.protocol + "' (known: " + known + ")");
    }
    return *fns;
}

Point2 random_unit(Rng& rng) {
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(a), std::sin(a)};
}

}  // namespace

Simulation::Simulation(const ScenarioConfig& config) : Simulation(config, resolve_protocol(config)) {}

Simulation::Simulation(const ScenarioConfig& config, ProtocolFns fns)
    : config_(config),
      robogram_(make_robogram(std::move(fns))),
      trajectory_(config.trajectory),
      companion_rng_(config.companion_stream_seed()),
      frame_rng_(config.frame_stream_seed()),
      cf_(config_init(config.params)) {
    validate(config_.params);
}

DemonicAction Simulation::next_action() {
    DemonicAction da;
    da.frames = next_frames(config_.frames, cf_, frame_rng_);
    da.companion_move = trajectory_.next_move(config_.params, cf_[kCompanion].loc, companion_rng_);
    return da;
}

StepEvents Simulation::advance() {
    const DemonicAction da = next_action();
    auto [next, events] = step(config_.params, robogram_, da, cf_);
    cf_ = std::move(next);
    ++round_;
    return events;
}

RunResult run_scenario(const ScenarioConfig& config, const RunOptions& opts) {
    return run_scenario(config, resolve_protocol(config), opts);
}

RunResult run_scenario(const ScenarioConfig& config, const ProtocolFns& fns, const RunOptions& opts) {
    Simulation sim(config, fns);
    ExecutionChecker checker(config.params);
    RunResult result;
    result.trace.config = config;

    auto emit = [&](TraceRecord rec) {
        if (opts.on_record) {
            opts.on_record(rec);
        }
        if (opts.keep_trace) {
            result.trace.records.push_back(std::move(rec));
        }
    };

    TraceRecord first{0, sim.configuration(), {}};
    first.events.premise_ok = has_unlaunched(first.cf);
    checker.observe_initial(first.cf);
    emit(std::move(first));

    for (std::size_t r = 1; r <= config.rounds; ++r) {
        if (opts.stop_after_premise_failure && checker.premise_failed()) {
            break;
        }
        if (opts.stop_at_first_failure && checker.report().failure_count() > 0) {
            break;
        }
        StepEvents events;
        try {
            events = sim.advance();
        } catch (const ProtocolFault& e) {
            result.fault = e.what();
        } catch (const ModelViolation& e) {
            result.fault = e.what();
        }
        if (result.fault) {
            checker.observe_fault(r, *result.fault);
            break;
        }
        checker.observe_step(sim.configuration(), events);
        emit(TraceRecord{r, sim.configuration(), std::move(events)});
        result.rounds_run = r;
    }
    result.trace.fault = result.fault;
    result.report = checker.report();
    return result;
}

ScenarioConfig fuzz_scenario(const ScenarioConfig& templ, std::uint64_t seed, std::size_t index,
                             const FuzzOptions& opts) {
    Rng rng(derive_seed(seed, index));
    ScenarioConfig c = templ;
    c.seed = rng.next_u64();
    c.frame_seed = rng.next_u64();
    if (opts.vary_frames) {
        c.frames = (index / 4) % 2 == 0 ? FramePolicy::identity : FramePolicy::random_isometry;
    }
    if (opts.vary_n && templ.params.n > 2) {
        const std::size_t lo = std::max<std::size_t>(2, templ.params.n / 2);
        c.params.n = lo + rng.below(templ.params.n - lo + 1);
    }

    std::size_t kind = 0;
    if (opts.vary_trajectory) {
        kind = index % 4;
    } else {
        const auto& t = templ.trajectory;
        kind = std::holds_alternative<RandomWalk>(t) ? 0
             : std::holds_alternative<Flee>(t)       ? 1
             : std::holds_alternative<Shrink>(t)     ? 2
             : std::holds_alternative<Waypoints>(t)  ? 3
                                                     : 4;
    }
    const double D = c.params.D;
    switch (kind) {
        case 0:
            c.trajectory = RandomWalk{};
            break;
        case 1:
            c.trajectory = Flee{random_unit(rng)};
            break;
        case 2: {
            Shrink s;
            s.direction = random_unit(rng);
            s.outbound_rounds = 20 + rng.below(131);
            c.trajectory = s;
            break;
        }
        case 3: {
            // Zig-zag: alternate far and near points around the base.
            Waypoints w;
            w.loop = true;
            const std::size_t k = 3 + rng.below(6);
            const double far = 30.0 * D + rng.uniform(0.0, 50.0 * D);
            for (std::size_t i = 0; i < k; ++i) {
                const double radius = (i % 2 == 0) ? far * rng.uniform(0.6, 1.0) : far * rng.uniform(0.0, 0.5);
                w.points.push_back(c.params.base + random_unit(rng) * radius);
            }
            c.trajectory = w;
            break;
        }
        default:
            break;  // replay: keep the template's recording
    }
    return c;
}

FuzzResult fuzz(const ScenarioConfig& templ, const FuzzOptions& opts) {
    FuzzResult result;
    std::vector<std::optional<ScenarioOutcome>> outcomes(opts.count);
    std::vector<std::optional<ExecutionReport>> reports(opts.count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> lowest_failure{std::numeric_limits<std::size_t>::max()};
    std::mutex err_mu;
    std::exception_ptr error;

    auto worker = [&] {
        try {
            for (std::size_t i = next++; i < opts.count; i = next++) {
                if (opts.stop_at_first_failure && i > lowest_failure.load()) {
                    continue;
                }
                const ScenarioConfig c = fuzz_scenario(templ, opts.seed, i, opts);
                RunOptions ro;
                ro.keep_trace = false;
                ro.stop_after_premise_failure = opts.stop_after_premise_failure;
                ro.stop_at_first_failure = opts.stop_at_first_failure;
                const ProtocolFns fns =
                    opts.protocol ? (*opts.protocol)(c.params) : *make_protocol(c.protocol, c.params);
                RunResult rr = run_scenario(c, fns, ro);
                ScenarioOutcome o;
                o.index = i;
                o.failures = rr.report.failure_count();
                o.warnings = rr.report.warning_count();
                o.rounds_run = rr.rounds_run;
                for (const Violation& v : rr.report.violations) {
                    if (!v.warning) {
                        o.first_kind = v.kind;
                        break;
                    }
                }
                if (o.failures > 0) {
                    std::size_t cur = lowest_failure.load();
                    while (i < cur && !lowest_failure.compare_exchange_weak(cur, i)) {
                    }
                    reports[i] = std::move(rr.report);
                }
                outcomes[i] = o;
            }
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (!error) {
                error = std::current_exception();
            }
        }
    };

    if (!opts.protocol && !make_protocol(templ.protocol, templ.params)) {
        throw ConfigError("unknown protocol '" + templ.protocol + "'");
    }
    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }

    for (std::size_t i = 0; i < opts.count; ++i) {
        if (!outcomes[i]) {
            continue;
        }
        if (opts.stop_at_first_failure && result.first_failure && i > *result.first_failure) {
            break;
        }
        result.outcomes.push_back(*outcomes[i]);
        if (outcomes[i]->failures > 0 && !result.first_failure) {
            result.first_failure = i;
            result.failing_config = fuzz_scenario(templ, opts.seed, i, opts);
            result.failing_report = reports[i];
        }
    }
    result.scenarios_run = result.outcomes.size();
    return result;
}

}  // namespace lifeline
