#pragma once

#include <stdexcept>
#include <string>

namespace cellsched {

// Invalid configuration (bad field value, unknown key, missing block).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Exhaustive search space larger than the configured cap.
// The CLI maps this to exit code 3.
class EnumerationCapError : public std::runtime_error {
 public:
  explicit EnumerationCapError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cellsched
