#pragma once
/**
 * @file trace.hpp
 * @brief Execution traces and their JSON-lines file format.
 *
 * One JSON document per line:
 *
 *   {"header": {"version": "...", "config": {...}}}
 *   {"round": 0, "robots": [{"ident":0,"x":0.0,"y":0.0,"light":false,"alive":true,"launched":true}, ...],
 *    "events": {"deaths": [], "launched": null, "premise_ok": true}}
 *   ...
 *   {"footer": {"records": N, "fault": null}}
 *
 * Coordinates use the shortest decimal form that reads back to the same
 * double, so a trace replays bit for bit. The footer makes truncation
 * detectable.
 */

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lifeline/config.hpp"
#include "lifeline/model.hpp"
#include "lifeline/verify.hpp"

namespace lifeline {

inline constexpr const char* kVersion = "lifeline 0.1.0";

struct TraceRecord {
    std::size_t round{0};
    Configuration cf;
    StepEvents events;

    bool operator==(const TraceRecord&) const = default;
};

struct Trace {
    ScenarioConfig config;
    std::string version{kVersion};
    std::vector<TraceRecord> records;
    std::optional<std::string> fault;  ///< set when the run stopped on a fault
};

/// Streams a trace: header on construction, then records, then the footer.
class TraceWriter {
public:
    TraceWriter(std::ostream& out, const ScenarioConfig& config);
    void write(const TraceRecord& rec);
    void finish(const std::optional<std::string>& fault = std::nullopt);

private:
    std::ostream& out_;
    std::size_t count_{0};
    bool finished_{false};
};

void write_trace(std::ostream& out, const Trace& t);

/// Throws ParseError on malformed, truncated or inconsistent input: missing
/// header/footer, non-contiguous rounds, wrong robot count, or a record 0
/// that is not the initial configuration.
Trace read_trace(std::istream& in);
Trace read_trace_file(const std::string& path);

ExecutionReport check_execution(const Trace& t);

}  // namespace lifeline
