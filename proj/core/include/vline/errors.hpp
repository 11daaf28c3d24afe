#pragma once

#include <stdexcept>
#include <string>

namespace vline {

/// Invalid configuration: bad sizes, degenerate geometry, malformed files.
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure: non-finite samples, solver non-convergence.
/// The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vline
