#pragma once

#include <stdexcept>
#include <string>

namespace lifeline {

/// Invalid parameters or scenario configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The execution model was driven outside its contract (e.g. a protocol asked
/// for a move longer than D, or a demonic action broke the origin condition).
class ModelViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A protocol function was applied where it is undefined (no eligible target).
class ProtocolFault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or truncated trace / config text.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lifeline
