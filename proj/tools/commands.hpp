// Copyright 2026 The dhsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DHSIM_TOOLS_COMMANDS_HPP
#define DHSIM_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

namespace dhsim::cli {

// Exit codes: 0 ok, 1 internal, 2 parse/input mismatch, 3 cap exceeded,
// 4 witness requested for inequivalent states, 5 stabilizer violation.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitInequivalentWitness = 4;
inline constexpr int kExitStabilizer = 5;

struct CommonOptions {
  std::optional<std::string> output;  // report destination; stdout if unset
  std::optional<double> tol;          // per-command default when unset
  std::optional<std::uint64_t> seed_override;
  int dense_cap = 10;
  std::size_t term_cap = 4096;
};

struct SimulateOptions {
  std::string input;
  std::optional<std::string> observables;
  std::optional<std::string> snapshot_out;
};

struct GaugeOptions {
  std::string mode;  // apply | compare | witness
  std::string input;
  std::optional<std::string> gauge_file;
  std::optional<std::string> with_snapshot;
  std::optional<std::string> snapshot_out;
};

struct AuditOptions {
  std::string input;
};

struct GaugedFlowOptions {
  std::string hamiltonian;
  std::string gauge_family;
  double t = 1.0;
  double dt = 1e-3;
};

struct AbOptions {
  std::optional<std::string> input;
  std::optional<std::string> demo;
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = kExitOk;
};

CommandResult cmd_simulate(const SimulateOptions& opts,
                           const CommonOptions& common);
CommandResult cmd_gauge(const GaugeOptions& opts, const CommonOptions& common);
CommandResult cmd_audit(const AuditOptions& opts, const CommonOptions& common);
CommandResult cmd_gauged_flow(const GaugedFlowOptions& opts,
                              const CommonOptions& common);
CommandResult cmd_ab(const AbOptions& opts, const CommonOptions& common);

/// Prints the report to stdout or writes it atomically to --output.
int emit_report(const CommandResult& result, const CommonOptions& common);

}  // namespace dhsim::cli

#endif  // DHSIM_TOOLS_COMMANDS_HPP
