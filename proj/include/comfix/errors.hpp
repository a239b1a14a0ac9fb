#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace comfix {

/// Bad arguments to an operation (dimension mismatch, invalid bounds, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed. `offset` is the byte position of
/// the first token that made the input invalid.
struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::string msg, std::size_t at)
        : std::runtime_error(std::move(msg)), offset(at) {}
};

/// A map could not be evaluated at a point (log of a non-positive value,
/// overflow to inf, ...). Carries the offending input point.
struct EvalError : std::runtime_error {
    std::vector<double> at;
    EvalError(std::string msg, std::vector<double> point)
        : std::runtime_error(std::move(msg)), at(std::move(point)) {}
};

/// Scenario file violates the schema. Message names the field and, for
/// syntax problems, the line number.
struct ScenarioError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace comfix
