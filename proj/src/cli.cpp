#include "lifeline/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "lifeline/config.hpp"
#include "lifeline/errors.hpp"
#include "lifeline/oracle.hpp"
#include "lifeline/protocol.hpp"
#include "lifeline/simulation.hpp"
#include "lifeline/svg.hpp"
#include "lifeline/trace.hpp"

namespace lifeline {

namespace {

// Loads a config and applies command-line overrides; returns an exit code on error.
std::optional<int> load_with_overrides(const std::string& path, std::optional<std::size_t> rounds,
                                       std::optional<std::uint64_t> seed,
                                       const std::optional<std::string>& protocol, ScenarioConfig& out,
                                       std::ostream& err) {
    try {
        out = load_config(path);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ParseError& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    if (rounds) {
        out.rounds = *rounds;
    }
    if (seed) {
        out.seed = *seed;
    }
    if (protocol) {
        out.protocol = *protocol;
    }
    if (!make_protocol(out.protocol, out.params)) {
        err << "config error: unknown protocol '" << out.protocol << "'\n";
        return kExitConfig;
    }
    return std::nullopt;
}

std::string svg_path(const std::string& trace_path, std::size_t round) {
    std::filesystem::path p(trace_path);
    std::ostringstream name;
    name << p.stem().string() << "_r" << std::setw(6) << std::setfill('0') << round << ".svg";
    return (p.parent_path() / name.str()).string();
}

}  // namespace

void print_report(std::ostream& out, const ExecutionReport& rep, std::size_t max_lines) {
    out << "rounds checked: " << rep.rounds_checked << '\n'
        << "failures: " << rep.failure_count() << '\n'
        << "warnings: " << rep.warning_count() << '\n';
    if (!rep.premise_failures.empty()) {
        out << "base pool empty from round " << rep.premise_failures.front()
            << " (later findings are warnings)\n";
    }
    std::size_t shown = 0;
    for (const Violation& v : rep.violations) {
        if (shown == max_lines) {
            out << "... " << rep.violations.size() - shown << " more\n";
            break;
        }
        out << (v.warning ? "[warn] " : "[FAIL] ") << "round " << v.round << ' ' << kind_name(v.kind) << " [";
        for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
            out << (i ? "," : "") << v.witnesses[i];
        }
        out << "] " << v.detail << '\n';
        ++shown;
    }
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
    ScenarioConfig config;
    if (auto code = load_with_overrides(args.config_path, args.rounds, args.seed, args.protocol, config, err)) {
        return *code;
    }
    std::ofstream trace_out(args.out_path, std::ios::binary);
    if (!trace_out) {
        err << "cannot write trace to '" << args.out_path << "'\n";
        return kExitIo;
    }
    TraceWriter writer(trace_out, config);
    bool svg_ok = true;
    RunOptions opts;
    opts.keep_trace = false;
    opts.on_record = [&](const TraceRecord& rec) {
        writer.write(rec);
        if (args.svg_every > 0 && rec.round % args.svg_every == 0) {
            std::ofstream svg(svg_path(args.out_path, rec.round));
            write_svg(svg, config.params, rec.cf, rec.round);
            svg_ok = svg_ok && static_cast<bool>(svg);
        }
    };
    const RunResult result = run_scenario(config, opts);
    writer.finish(result.fault);
    if (!trace_out || !svg_ok) {
        err << "I/O error while writing outputs\n";
        return kExitIo;
    }
    print_report(out, result.report);
    return result.report.passed() ? kExitPass : kExitViolation;
}

int cmd_check(const std::string& trace_path, std::ostream& out, std::ostream& err) {
    Trace trace;
    try {
        trace = read_trace_file(trace_path);
    } catch (const ParseError& e) {
        err << "trace error: " << e.what() << '\n';
        return kExitIo;
    }
    const ExecutionReport rep = check_execution(trace);
    print_report(out, rep);
    return rep.passed() ? kExitPass : kExitViolation;
}

int cmd_fuzz(const FuzzArgs& args, std::ostream& out, std::ostream& err) {
    ScenarioConfig templ;
    if (auto code = load_with_overrides(args.config_path, args.rounds, std::nullopt, args.protocol, templ, err)) {
        return *code;
    }
    FuzzOptions opts;
    opts.count = args.count;
    opts.seed = args.seed;
    opts.jobs = args.jobs;
    opts.vary_trajectory = !args.fixed_trajectory;
    const FuzzResult res = fuzz(templ, opts);
    out << "scenarios run: " << res.scenarios_run << " of " << args.count << '\n';
    if (!res.first_failure) {
        out << "all scenarios passed\n";
        return kExitPass;
    }

    const ScenarioConfig& bad = *res.failing_config;
    out << "scenario " << *res.first_failure << " failed (campaign seed " << args.seed << ", scenario seed "
        << bad.seed << ", frame seed " << bad.frame_stream_seed() << ", trajectory "
        << trajectory_name(bad.trajectory) << ", n " << bad.params.n << ")\n";
    print_report(out, *res.failing_report);

    std::ofstream trace_out(args.out_path, std::ios::binary);
    if (!trace_out) {
        err << "cannot write failing trace to '" << args.out_path << "'\n";
        return kExitIo;
    }
    TraceWriter writer(trace_out, bad);
    RunOptions ro;
    ro.keep_trace = false;
    ro.on_record = [&](const TraceRecord& rec) { writer.write(rec); };
    const RunResult replay = run_scenario(bad, ro);
    writer.finish(replay.fault);
    std::ofstream seed_out(args.out_path + ".seed");
    seed_out << "campaign_seed " << args.seed << "\nscenario_index " << *res.first_failure << "\nseed " << bad.seed
             << "\nframe_seed " << bad.frame_stream_seed() << '\n';
    out << "failing trace written to " << args.out_path << '\n';
    return kExitViolation;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
    Params params;
    if (args.config_path) {
        ScenarioConfig c;
        if (auto code = load_with_overrides(*args.config_path, std::nullopt, std::nullopt, std::nullopt, c, err)) {
            return *code;
        }
        params = c.params;
    }
    const auto fns = make_protocol(args.protocol, params);
    if (!fns) {
        err << "config error: unknown protocol '" << args.protocol << "'\n";
        return kExitConfig;
    }
    const OracleResult res = run_oracle(params, *fns, args.samples, args.seed);
    out << "protocol " << args.protocol << ": " << res.samples << " observations, " << res.failures
        << " with failing clauses\n";
    if (!res.first_counterexample) {
        return kExitPass;
    }
    for (std::size_t c = 0; c < kClauseCount; ++c) {
        if (res.clause_failures[c] > 0) {
            out << "  clause " << c + 1 << " (" << clause_name(static_cast<Clause>(c)) << "): "
                << res.clause_failures[c] << " failures\n";
        }
    }
    out << "first counterexample observation:\n" << describe(*res.first_counterexample) << '\n';
    for (const ClauseVerdict& v : res.first_report->clauses) {
        if (!v.holds) {
            out << "  " << v.counterexample << '\n';
        }
    }
    return kExitViolation;
}

}  // namespace lifeline
