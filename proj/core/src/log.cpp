#include "creasim/log.hpp"

#include <cstdlib>
#include <iostream>

namespace creasim {

namespace {

LogLevel parse_level(const char* value) {
  if (value == nullptr) return LogLevel::Warn;
  const std::string s(value);
  if (s == "debug") return LogLevel::Debug;
  if (s == "info") return LogLevel::Info;
  if (s == "warn") return LogLevel::Warn;
  if (s == "error") return LogLevel::Error;
  if (s == "off" || s == "quiet") return LogLevel::Off;
  return LogLevel::Warn;
}

const char* level_tag(LogLevel level) {
  switch (level) {
    case LogLevel::Debug: return "debug";
    case LogLevel::Info: return "info";
    case LogLevel::Warn: return "warn";
    case LogLevel::Error: return "error";
    case LogLevel::Off: return "off";
  }
  return "?";
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("CREASIM_LOG"));
  return level;
}

void log(LogLevel level, const std::string& message) {
  if (level < log_level()) return;
  std::cerr << "creasim [" << level_tag(level) << "] " << message << "\n";
}

}  // namespace creasim
