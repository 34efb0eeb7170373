#pragma once

#include <stdexcept>
#include <string>

namespace docsim {

/// Raised by SimulationConfig::validate before any simulation work starts.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a population cannot be initialized (e.g. duplicate ids).
class InitError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A caller broke an operation's precondition (e.g. a rating outside [0, 5]).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was requested that does not apply to the current model.
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// File output failed; the message carries the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace docsim
