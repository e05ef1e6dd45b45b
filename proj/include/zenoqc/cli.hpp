// Copyright 2026 The zenoqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

/// \file
/// Experiment runner: resolves a flat key-value configuration, runs one
/// command over its parameter grid and emits a CSV table with a provenance
/// header.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace zenoqc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidConfig = 2,
  kUnknownGate = 3,
  kNonMonotone = 4,
  kIoError = 5,
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ExitCode code() const { return code_; }

 private:
  ExitCode code_;
};

/// Commands accepted by run().
const std::vector<std::string>& command_names();

struct ExperimentConfig {
  std::string command;
  std::vector<double> epsilon;
  std::vector<double> freq_over_h;
  std::vector<int> rounds;
  std::string gate = "phase_z";
  double budget = 0.03;
  double bisect_tol = 1e-4;
  bool include_decoupling = true;
  std::size_t workers = 1;
  std::string out;  ///< empty: standard output

  /// Canonical "key = value" lines of the experiment parameters. workers and
  /// out are execution settings and are left out so tables do not depend on
  /// them.
  std::vector<std::string> canonical_lines() const;
  std::uint64_t hash() const;  ///< FNV-1a over canonical_lines
};

/// Parses "key = value" lines; '#' starts a comment. Throws CliError
/// (kInvalidConfig) on malformed lines or unknown keys.
std::map<std::string, std::string> parse_config_text(const std::string& text);

/// Command defaults, then `file`, then `overrides`.
ExperimentConfig resolve_config(const std::string& command,
                                const std::map<std::string, std::string>& file,
                                const std::map<std::string, std::string>& overrides);

enum class CellKind { Real, Integer };

struct ResultTable {
  std::vector<std::string> provenance;  ///< without the leading "# "
  std::vector<std::string> columns;
  std::vector<CellKind> kinds;
  std::vector<std::vector<double>> rows;
  std::string summary;

  std::string to_csv() const;
};

/// "%.11e", or "nan"/"inf" spelled out.
std::string format_real(double x);

ResultTable run(const ExperimentConfig& config);

/// Full command line handling; returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace zenoqc::cli
