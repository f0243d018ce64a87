// Command-line front end: run, check, fuzz, oracle.

#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "lifeline/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Life-line swarm protocol simulator and invariant checker"};
    app.require_subcommand(1);

    lifeline::RunArgs run;
    std::size_t rounds = 0;
    std::uint64_t seed = 0;
    std::string protocol;
    auto* run_cmd = app.add_subcommand("run", "Execute a scenario, write its trace and check it online");
    run_cmd->add_option("--config", run.config_path, "Scenario config (JSON)")->required();
    run_cmd->add_option("--out", run.out_path, "Trace output (JSON lines)")->required();
    auto* run_rounds = run_cmd->add_option("--rounds", rounds, "Override the number of rounds");
    auto* run_seed = run_cmd->add_option("--seed", seed, "Override the scenario seed");
    auto* run_proto = run_cmd->add_option("--protocol", protocol, "Override the protocol");
    run_cmd->add_option("--svg-every", run.svg_every, "Write an SVG snapshot every k rounds");

    std::string trace_path;
    auto* check_cmd = app.add_subcommand("check", "Re-verify a trace file");
    check_cmd->add_option("trace", trace_path, "Trace file")->required();

    lifeline::FuzzArgs fz;
    fz.jobs = std::max(1u, std::thread::hardware_concurrency());
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Run seeded scenario variations of a template");
    fuzz_cmd->add_option("--config", fz.config_path, "Template scenario config")->required();
    fuzz_cmd->add_option("--count", fz.count, "Number of scenarios");
    fuzz_cmd->add_option("--seed", fz.seed, "Campaign seed");
    fuzz_cmd->add_option("--out", fz.out_path, "Where to write the first failing trace");
    auto* fuzz_rounds = fuzz_cmd->add_option("--rounds", rounds, "Override rounds per scenario");
    auto* fuzz_proto = fuzz_cmd->add_option("--protocol", protocol, "Override the protocol");
    fuzz_cmd->add_option("--jobs", fz.jobs, "Worker threads");
    fuzz_cmd->add_flag("--fixed-trajectory", fz.fixed_trajectory,
                       "Keep the template's trajectory kind, randomizing only its parameters");

    lifeline::OracleArgs orc;
    std::string oracle_config;
    auto* oracle_cmd = app.add_subcommand("oracle", "Check a protocol's functions against the axioms");
    oracle_cmd->add_option("--protocol", orc.protocol, "Registered protocol name");
    oracle_cmd->add_option("--count,--samples", orc.samples, "Number of random observations");
    oracle_cmd->add_option("--seed", orc.seed, "Seed");
    auto* oracle_cfg = oracle_cmd->add_option("--config", oracle_config, "Take D/Dmax from this config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : lifeline::kExitConfig;
    }

    if (*run_cmd) {
        if (*run_rounds) run.rounds = rounds;
        if (*run_seed) run.seed = seed;
        if (*run_proto) run.protocol = protocol;
        return lifeline::cmd_run(run, std::cout, std::cerr);
    }
    if (*check_cmd) {
        return lifeline::cmd_check(trace_path, std::cout, std::cerr);
    }
    if (*fuzz_cmd) {
        if (*fuzz_rounds) fz.rounds = rounds;
        if (*fuzz_proto) fz.protocol = protocol;
        return lifeline::cmd_fuzz(fz, std::cout, std::cerr);
    }
    if (*oracle_cfg) {
        orc.config_path = oracle_config;
    }
    return lifeline::cmd_oracle(orc, std::cout, std::cerr);
}
