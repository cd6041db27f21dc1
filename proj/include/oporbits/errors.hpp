#pragma once

#include <stdexcept>
#include <string>

namespace oporbits {

/// Malformed input: bad grammar, bad JSON, schema violations. CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A documented precondition of an operation does not hold
/// (dimension mismatch, nonseparable input where separable is required, ...).
/// CLI exit code 3.
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace oporbits
