#pragma once

#include <stdexcept>
#include <string>

namespace eegqml {

/// Invalid configuration or parameter value (bad filter band, zero epochs, ...).
/// The CLI maps these to exit code 1.
struct ConfigError : std::invalid_argument {
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Problem with input data (malformed CSV, shape mismatch, signal too short).
/// The CLI maps these to exit code 2.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eegqml
