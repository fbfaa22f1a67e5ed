#pragma once

#include <stdexcept>
#include <string>

namespace sde {

// Bad arguments, configs or file contents. Maps to exit code 1 in the CLI.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite coefficient values, diverged reference paths and the like.
// Maps to exit code 2 in the CLI.
struct NumericalFailure : std::runtime_error {
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sde
