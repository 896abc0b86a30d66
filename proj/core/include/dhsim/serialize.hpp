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
//
// Versioned JSON formats for circuits, Hamiltonians, observables, gauges,
// lattices, and descriptor-state snapshots. Complex numbers are [re, im]
// pairs; matrices are row-major. All formats carry "version": 1.

#ifndef DHSIM_SERIALIZE_HPP
#define DHSIM_SERIALIZE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhsim/descriptor_state.hpp"
#include "dhsim/evolution.hpp"
#include "dhsim/gate.hpp"
#include "dhsim/gauge.hpp"
#include "dhsim/lattice.hpp"
#include "dhsim/limits.hpp"

namespace dhsim {

/// Throws ParseError when the file cannot be read.
std::string read_text_file(const std::string& path);

/// Write-temp-then-rename so consumers never observe partial content.
void write_text_file_atomic(const std::string& path,
                            const std::string& content);

Circuit parse_circuit_json(const std::string& text);
std::string circuit_to_json(const Circuit& c);

HamiltonianSpec parse_hamiltonian_json(const std::string& text);

std::vector<PauliString> parse_observables_json(const std::string& text);

/// One of the three gauge input shapes: a seeded random stabilizing
/// unitary, a diagonal exponential family, or an explicit matrix.
struct GaugeSpec {
  enum class Kind { kRandomStabilizing, kExpGenerator, kExplicit };
  Kind kind = Kind::kRandomStabilizing;
  std::uint64_t seed = 0;             // kRandomStabilizing
  PauliSum generator;                 // kExpGenerator
  double omega = 0.0;                 // kExpGenerator
  double t = 1.0;                     // evaluation time when a fixed
                                      // transform is needed
  std::optional<ComplexMatrix> matrix;  // kExplicit
  double theta = 0.0;                 // kExplicit
};

GaugeSpec parse_gauge_json(const std::string& text);

/// Evaluates the spec to a fixed transform for an n-qubit register.
GaugeTransform resolve_gauge_transform(
    const GaugeSpec& spec, int n,
    std::optional<std::uint64_t> seed_override = std::nullopt,
    Limits limits = {});

/// Evaluates the spec as a time-parametrized family.
GaugeFamily resolve_gauge_family(
    const GaugeSpec& spec, int n,
    std::optional<std::uint64_t> seed_override = std::nullopt,
    Limits limits = {});

std::string gauge_transform_to_json(const GaugeTransform& g);

/// A lattice plus optional analysis requests bundled in the same file.
struct LatticeAnalysisSpec {
  LatticeField field;
  std::vector<std::vector<Vertex>> loops;
  std::vector<std::vector<Plaquette>> regions;
  std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> paths;

  explicit LatticeAnalysisSpec(LatticeField f) : field(std::move(f)) {}
};

LatticeAnalysisSpec parse_lattice_json(const std::string& text);
std::string lattice_to_json(const LatticeField& field);

std::string snapshot_to_json(const DescriptorState& state);

/// Parses and validates a snapshot (including the descriptor invariants);
/// invalid descriptors are reported as ParseError.
DescriptorState parse_snapshot_json(const std::string& text,
                                    Limits limits = {});

}  // namespace dhsim

#endif  // DHSIM_SERIALIZE_HPP
