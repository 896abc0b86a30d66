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

#ifndef DHSIM_GATE_HPP
#define DHSIM_GATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dhsim/complex_matrix.hpp"

namespace dhsim {

enum class GateKind {
  kI, kX, kY, kZ, kH, kS, kT,
  kRX, kRY, kRZ,
  kCNOT, kCZ, kSWAP,
  kCustom,
};

std::string gate_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
  GateKind kind = GateKind::kI;
  std::vector<int> targets;
  std::vector<double> params;             // rotation angles, radians
  std::optional<ComplexMatrix> custom;    // unitary for kCustom

  static Gate single(GateKind kind, int target);
  static Gate rotation(GateKind kind, int target, double angle);
  static Gate two(GateKind kind, int a, int b);
  static Gate custom_gate(ComplexMatrix matrix, std::vector<int> targets);
};

/// The gate's unitary on its own slots (2^arity square).
ComplexMatrix gate_matrix(const Gate& g);

/// Arity, distinct in-range targets, parameter count, unitarity (1e-10).
/// Throws std::invalid_argument / std::out_of_range.
void validate_gate(const Gate& g, int n);

struct Circuit {
  int n = 0;
  std::vector<Gate> ops;
};

void validate_circuit(const Circuit& c);

}  // namespace dhsim

#endif  // DHSIM_GATE_HPP
