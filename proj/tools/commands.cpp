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

#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <set>
#include <utility>
#include <vector>

#include "dhsim/descriptor_state.hpp"
#include "dhsim/errors.hpp"
#include "dhsim/evolution.hpp"
#include "dhsim/gauge.hpp"
#include "dhsim/lattice.hpp"
#include "dhsim/serialize.hpp"
#include "dhsim/tensor.hpp"

namespace dhsim::cli {

namespace {

using nlohmann::json;

// Deliberate command failure with a dedicated exit code (witness modes).
struct CommandFailure {
  int code;
  std::string message;
};

int classify_exception(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return kExitParse;
  if (dynamic_cast<const CapExceeded*>(&e)) return kExitCap;
  if (dynamic_cast<const StabilizerViolation*>(&e)) return kExitStabilizer;
  if (dynamic_cast<const std::invalid_argument*>(&e)) return kExitParse;
  if (dynamic_cast<const std::out_of_range*>(&e)) return kExitParse;
  return kExitInternal;
}

Limits limits_from(const CommonOptions& common) {
  Limits limits;
  limits.dense_cap = common.dense_cap;
  limits.term_cap = common.term_cap;
  return limits;
}

CommandResult run_command(const std::string& command, json inputs,
                          const std::function<json()>& body) {
  const auto start = std::chrono::steady_clock::now();
  json report{{"version", 1}, {"command", command},
              {"inputs", std::move(inputs)}};
  CommandResult out;
  try {
    json results = body();
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    results["timings_ms"] = json{{"total", ms}};
    report["results"] = std::move(results);
    report["status"] = json{{"ok", true}};
    out.exit_code = kExitOk;
  } catch (const CommandFailure& f) {
    report["results"] = json::object();
    report["status"] =
        json{{"ok", false}, {"code", f.code}, {"message", f.message}};
    out.exit_code = f.code;
  } catch (const std::exception& e) {
    const int code = classify_exception(e);
    report["results"] = json::object();
    report["status"] =
        json{{"ok", false}, {"code", code}, {"message", e.what()}};
    out.exit_code = code;
  }
  out.report = std::move(report);
  return out;
}

std::vector<PauliString> single_qubit_observables(int n) {
  std::vector<PauliString> out;
  for (int q = 0; q < n; ++q) {
    for (Axis a : kAxes) {
      out.push_back(PauliString::single(n, q, axis_letter(a)));
    }
  }
  return out;
}

std::vector<PauliString> pair_observables(int n) {
  std::vector<PauliString> out;
  for (int q1 = 0; q1 < n; ++q1) {
    for (int q2 = q1 + 1; q2 < n; ++q2) {
      for (Axis a : kAxes) {
        for (Axis b : kAxes) {
          PauliString s(n);
          s.set_letter(q1, axis_letter(a));
          s.set_letter(q2, axis_letter(b));
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

std::vector<PauliString> invariance_observables(int n) {
  std::vector<PauliString> out = single_qubit_observables(n);
  if (n <= 5) {
    const std::vector<PauliString> pairs = pair_observables(n);
    out.insert(out.end(), pairs.begin(), pairs.end());
  }
  return out;
}

json footprint_json(const DescriptorState& state) {
  json out = json::array();
  for (int q : footprint(state)) out.push_back(q);
  return out;
}

json expectations_json(const DescriptorState& state,
                       const std::vector<PauliString>& observables,
                       double* imag_max_out) {
  json out = json::object();
  double imag_max = 0.0;
  for (const PauliString& obs : observables) {
    const Complex value = expectation(state, obs);
    imag_max = std::max(imag_max, std::abs(value.imag()));
    out[obs.str()] = value.real();
  }
  if (imag_max_out) *imag_max_out = imag_max;
  return out;
}

json vertices_json(const std::vector<Vertex>& vertices) {
  json out = json::array();
  for (const Vertex& v : vertices) out.push_back(json::array({v.x, v.y}));
  return out;
}

std::vector<Vertex> boundary_loop_vertices(const LatticeField& field) {
  const int w = field.width() - 1;
  const int h = field.height() - 1;
  std::vector<Vertex> out;
  for (int x = 0; x <= w; ++x) out.push_back({x, 0});
  for (int y = 1; y <= h; ++y) out.push_back({w, y});
  for (int x = w - 1; x >= 0; --x) out.push_back({x, h});
  for (int y = h - 1; y >= 0; --y) out.push_back({0, y});
  return out;
}

json analyze_lattice(const LatticeAnalysisSpec& spec) {
  const LatticeField& field = spec.field;
  json results;
  results["coupling"] = field.coupling();

  json flux_rows = json::array();
  for (int y = 0; y < field.plaquette_rows(); ++y) {
    json row = json::array();
    for (int x = 0; x < field.plaquette_cols(); ++x) {
      row.push_back(plaquette_flux(field, {x, y}));
    }
    flux_rows.push_back(std::move(row));
  }
  results["flux"] = std::move(flux_rows);

  std::vector<std::vector<Vertex>> loops = spec.loops;
  if (loops.empty()) {
    loops.push_back(boundary_loop_vertices(field));
  }
  json loop_reports = json::array();
  for (const auto& vertices : loops) {
    const Loop loop = loop_from_vertices(vertices);
    const HomologyReport rep = homology_obstruction_demo(field, loop);
    loop_reports.push_back(json{{"vertices", vertices_json(vertices)},
                                {"phase", rep.loop_phase},
                                {"enclosed_flux", rep.enclosed_flux},
                                {"verdict", rep.verdict}});
  }
  results["loops"] = std::move(loop_reports);

  json region_reports = json::array();
  for (const auto& region : spec.regions) {
    json plaqs = json::array();
    for (const Plaquette& p : region) plaqs.push_back(json::array({p.x, p.y}));
    const GaugeFixResult fix = gauge_fix_region(field, region);
    json entry{{"plaquettes", std::move(plaqs)}};
    if (std::holds_alternative<ScalarGauge>(fix)) {
      const LatticeField fixed =
          apply_scalar_gauge(field, std::get<ScalarGauge>(fix));
      double max_link = 0.0;
      for (const Plaquette& p : region) {
        for (const DirectedEdge& e :
             {DirectedEdge{{p.x, p.y}, {p.x + 1, p.y}},
              DirectedEdge{{p.x + 1, p.y}, {p.x + 1, p.y + 1}},
              DirectedEdge{{p.x, p.y + 1}, {p.x + 1, p.y + 1}},
              DirectedEdge{{p.x, p.y}, {p.x, p.y + 1}}}) {
          max_link = std::max(max_link, std::abs(fixed.link(e)));
        }
      }
      entry["outcome"] = "fixed";
      entry["max_region_link_after"] = max_link;
    } else {
      entry["outcome"] = std::get<GaugeFixFailure>(fix).reason;
    }
    region_reports.push_back(std::move(entry));
  }
  results["regions"] = std::move(region_reports);

  if (spec.paths) {
    const auto& [a, b] = *spec.paths;
    const double shift = fringe_shift(field, path_from_vertices(a),
                                      path_from_vertices(b));
    results["fringe"] = json{{"path1", vertices_json(a)},
                             {"path2", vertices_json(b)},
                             {"shift", shift}};
  }
  return results;
}

LatticeAnalysisSpec builtin_ab_demo(const std::string& name) {
  double phi;
  if (name == "solenoid-pi3") {
    phi = M_PI / 3.0;
  } else if (name == "solenoid-zero") {
    phi = 0.0;
  } else {
    throw ParseError("unknown builtin demo '" + name + "'");
  }
  // 4x4 vertices, solenoid at the central plaquette, two interference
  // paths around opposite sides, one gauge-fixable region and one region
  // containing the solenoid.
  LatticeAnalysisSpec spec(solenoid_field(4, 4, {1, 1}, phi));
  spec.loops.push_back(boundary_loop_vertices(spec.field));
  spec.loops.push_back({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  spec.regions.push_back({{0, 0}, {1, 0}, {2, 0}, {0, 1}, {0, 2}});
  spec.regions.push_back({{0, 1}, {1, 1}, {2, 1}});
  spec.paths = std::make_pair(
      std::vector<Vertex>{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {3, 3}},
      std::vector<Vertex>{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}, {3, 3}});
  return spec;
}

}  // namespace

CommandResult cmd_simulate(const SimulateOptions& opts,
                           const CommonOptions& common) {
  json inputs{{"circuit", opts.input},
              {"dense_cap", common.dense_cap},
              {"term_cap", common.term_cap}};
  if (opts.observables) inputs["observables"] = *opts.observables;
  if (opts.snapshot_out) inputs["snapshot"] = *opts.snapshot_out;

  return run_command("simulate", std::move(inputs), [&]() -> json {
    const Limits limits = limits_from(common);
    const Circuit circuit = parse_circuit_json(read_text_file(opts.input));
    std::vector<PauliString> observables =
        opts.observables
            ? parse_observables_json(read_text_file(*opts.observables))
            : single_qubit_observables(circuit.n);
    if (!observables.empty() && observables.front().size() != circuit.n) {
      throw ParseError("observables length does not match circuit qubits");
    }

    const DescriptorState dense_state = run_circuit(
        DescriptorState::init(circuit.n, Backend::kDense, limits), circuit);

    json results;
    double imag_max = 0.0;
    results["expectations"] =
        expectations_json(dense_state, observables, &imag_max);
    results["imag_residue_max"] = imag_max;
    results["footprint"] = footprint_json(dense_state);

    // Pauli-sum cross-check when the circuit fits the term budget.
    json backend_info;
    try {
      const DescriptorState pauli_state = run_circuit(
          DescriptorState::init(circuit.n, Backend::kPauliSum, limits),
          circuit);
      double agreement = 0.0;
      for (const PauliString& obs : observables) {
        agreement = std::max(agreement,
                             std::abs(expectation(dense_state, obs) -
                                      expectation(pauli_state, obs)));
      }
      backend_info["pauli_run"] = true;
      backend_info["agreement_max"] = agreement;
    } catch (const CapExceeded& e) {
      backend_info["pauli_run"] = false;
      backend_info["skipped_reason"] = e.what();
    }
    results["backend"] = std::move(backend_info);

    if (opts.snapshot_out) {
      write_text_file_atomic(*opts.snapshot_out,
                             snapshot_to_json(dense_state));
      results["snapshot_written"] = *opts.snapshot_out;
    }
    return results;
  });
}

CommandResult cmd_gauge(const GaugeOptions& opts, const CommonOptions& common) {
  json inputs{{"mode", opts.mode}, {"snapshot", opts.input}};
  if (opts.gauge_file) inputs["gauge"] = *opts.gauge_file;
  if (opts.with_snapshot) inputs["with"] = *opts.with_snapshot;
  if (opts.snapshot_out) inputs["snapshot_out"] = *opts.snapshot_out;
  if (common.seed_override) inputs["seed_override"] = *common.seed_override;
  const double tol = common.tol.value_or(1e-8);
  inputs["tol"] = tol;

  return run_command("gauge", std::move(inputs), [&]() -> json {
    const Limits limits = limits_from(common);
    const DescriptorState state =
        parse_snapshot_json(read_text_file(opts.input), limits);
    json results;

    if (opts.mode == "apply") {
      if (!opts.gauge_file) {
        throw ParseError("gauge apply: --gauge file required");
      }
      const GaugeSpec spec = parse_gauge_json(read_text_file(*opts.gauge_file));
      const GaugeTransform g = resolve_gauge_transform(
          spec, state.num_qubits(), common.seed_override, limits);
      const DescriptorState gauged = apply_gauge(state, g);

      double invariance = 0.0;
      for (const PauliString& obs :
           invariance_observables(state.num_qubits())) {
        invariance = std::max(invariance, std::abs(expectation(state, obs) -
                                                   expectation(gauged, obs)));
      }
      results["theta"] = g.theta;
      results["invariance_max_diff"] = invariance;
      results["footprint_before"] = footprint_json(state);
      results["footprint_after"] = footprint_json(gauged);
      if (opts.snapshot_out) {
        write_text_file_atomic(*opts.snapshot_out, snapshot_to_json(gauged));
        results["snapshot_written"] = *opts.snapshot_out;
      }
      return results;
    }

    if (opts.mode == "compare" || opts.mode == "witness") {
      if (!opts.with_snapshot) {
        throw ParseError("gauge " + opts.mode + ": --with snapshot required");
      }
      const DescriptorState other =
          parse_snapshot_json(read_text_file(*opts.with_snapshot), limits);
      const double distance =
          max_norm_diff(canonical_form(state), canonical_form(other));
      results["canonical_distance"] = distance;
      results["equivalent"] = distance < tol;

      if (opts.mode == "compare") {
        return results;
      }
      const WitnessResult witness = recover_witness(state, other);
      if (std::holds_alternative<WitnessFailure>(witness)) {
        const std::string& reason = std::get<WitnessFailure>(witness).reason;
        throw CommandFailure{reason == "inequivalent" ? kExitInequivalentWitness
                                                      : kExitParse,
                             "witness recovery failed: " + reason};
      }
      const GaugeTransform& g = std::get<GaugeTransform>(witness);
      validate_gauge(g, 1e-8);
      // Residual of reproducing the second state's descriptors.
      const DescriptorState reproduced = apply_gauge(state, g);
      double residual = 0.0;
      const DescriptorState other_dense = to_dense(other);
      const DescriptorState repro_dense = to_dense(reproduced);
      for (std::size_t i = 0; i < other_dense.dense_triples().size(); ++i) {
        residual = std::max(residual,
                            max_norm_diff(other_dense.dense_triples()[i],
                                          repro_dense.dense_triples()[i]));
      }
      results["witness"] = json::parse(gauge_transform_to_json(g));
      results["theta"] = g.theta;
      results["stabilizer_ok"] = true;
      results["reproduction_residual"] = residual;
      return results;
    }

    throw ParseError("gauge: unknown mode '" + opts.mode +
                     "' (expected apply | compare | witness)");
  });
}

CommandResult cmd_audit(const AuditOptions& opts, const CommonOptions& common) {
  json inputs{{"circuit", opts.input}};
  const double tol = common.tol.value_or(1e-12);
  inputs["tol"] = tol;

  return run_command("audit", std::move(inputs), [&]() -> json {
    const Limits limits = limits_from(common);
    const Circuit circuit = parse_circuit_json(read_text_file(opts.input));
    DescriptorState state =
        DescriptorState::init(circuit.n, Backend::kDense, limits);

    json ledger = json::array();
    bool local = true;
    for (const Gate& g : circuit.ops) {
      const DescriptorState next = apply_gate(state, g);
      std::set<int> changed;
      for (int q = 0; q < circuit.n; ++q) {
        for (Axis a : kAxes) {
          if (max_norm_diff(state.dense_descriptor(q, a),
                            next.dense_descriptor(q, a)) > tol) {
            changed.insert(q);
            break;
          }
        }
      }
      const std::set<int> targets(g.targets.begin(), g.targets.end());
      bool contained = true;
      for (int q : changed) {
        if (!targets.count(q)) contained = false;
      }
      if (!contained) local = false;
      json entry{{"gate", gate_name(g.kind)},
                 {"targets", g.targets},
                 {"changed", json::array()}};
      for (int q : changed) entry["changed"].push_back(q);
      ledger.push_back(std::move(entry));
      state = next;
    }
    return json{{"ledger", std::move(ledger)},
                {"verdict", local ? "local" : "nonlocal"}};
  });
}

CommandResult cmd_gauged_flow(const GaugedFlowOptions& opts,
                              const CommonOptions& common) {
  json inputs{{"hamiltonian", opts.hamiltonian},
              {"gauge_family", opts.gauge_family},
              {"t", opts.t},
              {"dt", opts.dt}};

  return run_command("gauged-flow", std::move(inputs), [&]() -> json {
    const Limits limits = limits_from(common);
    const HamiltonianSpec h =
        parse_hamiltonian_json(read_text_file(opts.hamiltonian));
    const int n = h.terms.num_qubits();
    const GaugeSpec spec = parse_gauge_json(read_text_file(opts.gauge_family));
    const GaugeFamily fam =
        resolve_gauge_family(spec, n, common.seed_override, limits);

    const DescriptorState start =
        DescriptorState::init(n, Backend::kDense, limits);
    const DescriptorState exact = evolve_hamiltonian(start, h, opts.t);
    const DescriptorState closed =
        apply_gauge(exact, gauge_family_value(fam, opts.t));

    auto max_error = [&](const DescriptorState& integrated) {
      double err = 0.0;
      for (std::size_t i = 0; i < closed.dense_triples().size(); ++i) {
        err = std::max(err, max_norm_diff(integrated.dense_triples()[i],
                                          closed.dense_triples()[i]));
      }
      return err;
    };

    const DescriptorState integrated =
        integrate_gauged_flow(start, h, fam, opts.t, opts.dt);
    const double error = max_error(integrated);
    const DescriptorState integrated_half =
        integrate_gauged_flow(start, h, fam, opts.t, opts.dt / 2.0);
    const double error_half = max_error(integrated_half);

    double invariance = 0.0;
    for (const PauliString& obs : single_qubit_observables(n)) {
      invariance = std::max(invariance, std::abs(expectation(integrated, obs) -
                                                 expectation(exact, obs)));
    }

    json results{{"max_error_vs_closed_form", error},
                 {"max_error_half_dt", error_half},
                 {"invariance_residue", invariance}};
    if (error_half > 0.0) {
      results["order_ratio"] = error / error_half;
    }
    return results;
  });
}

CommandResult cmd_ab(const AbOptions& opts, const CommonOptions& common) {
  json inputs;
  if (opts.input) inputs["lattice"] = *opts.input;
  if (opts.demo) inputs["demo"] = *opts.demo;
  (void)common;

  return run_command("ab", std::move(inputs), [&]() -> json {
    if (!opts.input && !opts.demo) {
      throw ParseError("ab: need --input lattice file or --demo name");
    }
    if (opts.input && opts.demo) {
      throw ParseError("ab: --input and --demo are mutually exclusive");
    }
    const LatticeAnalysisSpec spec =
        opts.demo ? builtin_ab_demo(*opts.demo)
                  : parse_lattice_json(read_text_file(*opts.input));
    return analyze_lattice(spec);
  });
}

int emit_report(const CommandResult& result, const CommonOptions& common) {
  const std::string text = result.report.dump(2) + "\n";
  if (common.output) {
    write_text_file_atomic(*common.output, text);
  } else {
    std::cout << text;
  }
  return result.exit_code;
}

}  // namespace dhsim::cli
