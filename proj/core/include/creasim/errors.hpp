#pragma once

#include <stdexcept>
#include <string>

namespace creasim {

/// Raised when a config document is structurally or semantically invalid.
/// Carries the JSON key path of the offending value ("agents[3].external...").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path.empty() ? what : path + ": " + what),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Raised when a runtime invariant of the engine is violated. Maps to CLI
/// exit code 3, as opposed to usage/config problems (exit 2).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace creasim
