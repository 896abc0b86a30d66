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

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace dhsim::cli;

  CLI::App app{
      "dhsim: Heisenberg-picture descriptor simulator with a gauge engine "
      "and a lattice Aharonov-Bohm demo"};
  app.require_subcommand(1);

  CommonOptions common;
  SimulateOptions simulate_opts;
  GaugeOptions gauge_opts;
  AuditOptions audit_opts;
  GaugedFlowOptions flow_opts;
  AbOptions ab_opts;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--output", common.output,
                    "Write the JSON report here instead of stdout");
    cmd->add_option("--tol", common.tol, "Comparison tolerance override");
    cmd->add_option("--seed-override", common.seed_override,
                    "Replace the seed of any seeded gauge input");
    cmd->add_option("--dense-cap", common.dense_cap,
                    "Max qubits for the dense backend (default 10)");
    cmd->add_option("--term-cap", common.term_cap,
                    "Max Pauli-sum terms per descriptor (default 4096)");
  };

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a circuit on the descriptor state");
  simulate->add_option("--input", simulate_opts.input, "Circuit JSON file")
      ->required();
  simulate->add_option("--observables", simulate_opts.observables,
                       "Observables JSON file (Pauli strings)");
  simulate->add_option("--snapshot", simulate_opts.snapshot_out,
                       "Write the resulting state snapshot here");
  add_common(simulate);

  CLI::App* gauge = app.add_subcommand(
      "gauge", "Apply gauges, compare states, or recover a witness");
  gauge->add_option("--mode", gauge_opts.mode, "apply | compare | witness")
      ->required();
  gauge->add_option("--input", gauge_opts.input, "State snapshot JSON file")
      ->required();
  gauge->add_option("--gauge", gauge_opts.gauge_file,
                    "Gauge JSON file (apply mode)");
  gauge->add_option("--with", gauge_opts.with_snapshot,
                    "Second snapshot (compare/witness modes)");
  gauge->add_option("--snapshot", gauge_opts.snapshot_out,
                    "Write the gauged snapshot here (apply mode)");
  add_common(gauge);

  CLI::App* audit = app.add_subcommand(
      "audit", "Per-gate locality ledger for a circuit");
  audit->add_option("--input", audit_opts.input, "Circuit JSON file")
      ->required();
  add_common(audit);

  CLI::App* flow = app.add_subcommand(
      "gauged-flow",
      "Integrate the gauge-modified flow and compare to the closed form");
  flow->add_option("--hamiltonian", flow_opts.hamiltonian,
                   "Hamiltonian JSON file")
      ->required();
  flow->add_option("--gauge-family", flow_opts.gauge_family,
                   "Gauge family JSON file")
      ->required();
  flow->add_option("--t", flow_opts.t, "Total evolution time (default 1.0)");
  flow->add_option("--dt", flow_opts.dt, "Integrator step (default 1e-3)");
  add_common(flow);

  CLI::App* ab = app.add_subcommand(
      "ab", "Lattice vector-potential analysis (flux, loops, gauge fixing)");
  ab->add_option("--input", ab_opts.input, "Lattice JSON file");
  ab->add_option("--demo", ab_opts.demo,
                 "Builtin demo: solenoid-pi3 | solenoid-zero");
  add_common(ab);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  }

  CommandResult result;
  if (simulate->parsed()) {
    result = cmd_simulate(simulate_opts, common);
  } else if (gauge->parsed()) {
    result = cmd_gauge(gauge_opts, common);
  } else if (audit->parsed()) {
    result = cmd_audit(audit_opts, common);
  } else if (flow->parsed()) {
    result = cmd_gauged_flow(flow_opts, common);
  } else if (ab->parsed()) {
    result = cmd_ab(ab_opts, common);
  } else {
    std::cerr << "no subcommand selected\n";
    return kExitParse;
  }
  return emit_report(result, common);
}
