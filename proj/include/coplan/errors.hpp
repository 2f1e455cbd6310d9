#pragma once

#include <stdexcept>
#include <string>

namespace coplan {

// Bad scenario/config input (unknown entity, malformed file, value out of range).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Start-state sampling hit max_attempts without a valid, collision-free draw.
struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// No valid, collision-free start state available for selection.
struct NoValidStartState : std::runtime_error {
    explicit NoValidStartState(const std::string& msg) : std::runtime_error(msg) {}
};

// A tree was asked for its best action before any edge was explored.
struct NoActionAvailable : std::runtime_error {
    explicit NoActionAvailable(const std::string& msg) : std::runtime_error(msg) {}
};

// Quantile operation on an empty sample set.
struct EmptyDistribution : std::invalid_argument {
    explicit EmptyDistribution(const std::string& msg) : std::invalid_argument(msg) {}
};

// Kernel regression with zero total weight.
struct UndefinedRegression : std::invalid_argument {
    explicit UndefinedRegression(const std::string& msg) : std::invalid_argument(msg) {}
};

// Lower confidence bound queried for an action with no kernel mass.
struct UndefinedBound : std::invalid_argument {
    explicit UndefinedBound(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace coplan
