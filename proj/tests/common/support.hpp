#pragma once

// Shared fixtures for the unit and acceptance suites: spec builders for the
// common agent shapes, a scratch-directory guard, and a subprocess harness
// for driving the CLI binary.

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "creasim/agent.hpp"
#include "creasim/io.hpp"
#include "creasim/society.hpp"

namespace testsupport {

namespace fs = std::filesystem;

inline creasim::SpaceConfig space(int d, int rho) {
  creasim::SpaceConfig cfg;
  cfg.d = d;
  cfg.rho = rho;
  return cfg;
}

inline creasim::Region region(std::vector<double> center, double radius) {
  creasim::Region r;
  r.center = std::move(center);
  r.radius = radius;
  return r;
}

inline creasim::WeightedConstraint constraint(std::vector<double> center, double radius,
                                              double weight = 1.0) {
  creasim::WeightedConstraint wc;
  wc.weight = weight;
  wc.region = region(std::move(center), radius);
  return wc;
}

/// One group, one ball that contains every grid point (max normalized
/// distance from the center of [0,1]^d is 0.5).
inline creasim::InternalConfig full_cover_internal(int d) {
  creasim::InternalConfig ic;
  ic.groups.push_back({constraint(std::vector<double>(d, 0.5), 1.0)});
  return ic;
}

inline creasim::InternalConfig ball_internal(std::vector<double> center, double radius) {
  creasim::InternalConfig ic;
  ic.groups.push_back({constraint(std::move(center), radius)});
  return ic;
}

inline creasim::ExternalConfig external_one(std::vector<double> center, double radius,
                                            double weight = 1.0) {
  creasim::ExternalConfig ec;
  ec.constraints.push_back(constraint(std::move(center), radius, weight));
  return ec;
}

inline creasim::AgentSpec base_spec(int d) {
  creasim::AgentSpec spec;
  spec.internal = full_cover_internal(d);
  return spec;
}

/// Unique scratch directory, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("creasim-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string shell_quote(const std::string& s) {
  std::string quoted = "'";
  for (char c : s) {
    if (c == '\'') {
      quoted += "'\\''";
    } else {
      quoted += c;
    }
  }
  quoted += "'";
  return quoted;
}

/// Runs the built CLI with `args`, cwd = `dir`. Captures both streams.
inline CliResult run_cli(const std::vector<std::string>& args, const fs::path& dir) {
  const fs::path out_file = dir / ".cli_stdout";
  const fs::path err_file = dir / ".cli_stderr";
  std::string cmd = "cd " + shell_quote(dir.string()) + " && " + shell_quote(CREASIM_CLI_PATH);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(out_file.string()) + " 2> " + shell_quote(err_file.string());

  const int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = creasim::read_text_file(out_file);
  r.err = creasim::read_text_file(err_file);
  return r;
}

}  // namespace testsupport
