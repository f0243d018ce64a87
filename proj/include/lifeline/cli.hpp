#pragma once
/**
 * @file cli.hpp
 * @brief Subcommands of the `lifeline` tool, callable in-process.
 *
 * Exit codes: 0 pass, 1 invariant violation, 2 configuration error,
 * 3 I/O or parse error.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lifeline/verify.hpp"

namespace lifeline {

enum ExitCode : int {
    kExitPass = 0,
    kExitViolation = 1,
    kExitConfig = 2,
    kExitIo = 3,
};

struct RunArgs {
    std::string config_path;
    std::string out_path;
    std::optional<std::size_t> rounds;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> protocol;
    std::size_t svg_every{0};
};

struct FuzzArgs {
    std::string config_path;
    std::size_t count{100};
    std::uint64_t seed{0};
    std::string out_path{"fuzz_failure.jsonl"};
    unsigned jobs{1};
    std::optional<std::size_t> rounds;
    std::optional<std::string> protocol;
    bool fixed_trajectory{false};
};

struct OracleArgs {
    std::string protocol{"sample"};
    std::size_t samples{10000};
    std::uint64_t seed{0};
    std::optional<std::string> config_path;
};

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_check(const std::string& trace_path, std::ostream& out, std::ostream& err);
int cmd_fuzz(const FuzzArgs& args, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err);

void print_report(std::ostream& out, const ExecutionReport& rep, std::size_t max_lines = 20);

}  // namespace lifeline
