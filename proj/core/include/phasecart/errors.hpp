#pragma once

#include <stdexcept>
#include <string>

namespace phasecart {

/// Bad configuration or arguments (CLI exit code 3).
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A phase trace ran into a zero of c; the Pancharatnam phase is undefined
/// there (CLI exit code 2).
class SingularPathError : public std::runtime_error {
 public:
  explicit SingularPathError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal cross-check failed, e.g. a closed-loop phase that is not an
/// integer multiple of 360 degrees (CLI exit code 4).
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace phasecart
