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

#include "dhsim/gate.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "dhsim/errors.hpp"
#include "dhsim/tensor.hpp"

namespace dhsim {

namespace {

constexpr double kSqrtHalf = 0.7071067811865475244;

int named_gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::kI:
    case GateKind::kX:
    case GateKind::kY:
    case GateKind::kZ:
    case GateKind::kH:
    case GateKind::kS:
    case GateKind::kT:
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      return 1;
    case GateKind::kCNOT:
    case GateKind::kCZ:
    case GateKind::kSWAP:
      return 2;
    case GateKind::kCustom:
      return -1;  // taken from the matrix
  }
  return -1;
}

int param_count(GateKind kind) {
  switch (kind) {
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      return 1;
    default:
      return 0;
  }
}

}  // namespace

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kI: return "I";
    case GateKind::kX: return "X";
    case GateKind::kY: return "Y";
    case GateKind::kZ: return "Z";
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kT: return "T";
    case GateKind::kRX: return "RX";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kCNOT: return "CNOT";
    case GateKind::kCZ: return "CZ";
    case GateKind::kSWAP: return "SWAP";
    case GateKind::kCustom: return "CUSTOM";
  }
  return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
  if (name == "I") return GateKind::kI;
  if (name == "X") return GateKind::kX;
  if (name == "Y") return GateKind::kY;
  if (name == "Z") return GateKind::kZ;
  if (name == "H") return GateKind::kH;
  if (name == "S") return GateKind::kS;
  if (name == "T") return GateKind::kT;
  if (name == "RX") return GateKind::kRX;
  if (name == "RY") return GateKind::kRY;
  if (name == "RZ") return GateKind::kRZ;
  if (name == "CNOT") return GateKind::kCNOT;
  if (name == "CZ") return GateKind::kCZ;
  if (name == "SWAP") return GateKind::kSWAP;
  if (name == "CUSTOM") return GateKind::kCustom;
  throw ParseError("unknown gate name '" + name + "'");
}

Gate Gate::single(GateKind kind, int target) {
  Gate g;
  g.kind = kind;
  g.targets = {target};
  return g;
}

Gate Gate::rotation(GateKind kind, int target, double angle) {
  Gate g;
  g.kind = kind;
  g.targets = {target};
  g.params = {angle};
  return g;
}

Gate Gate::two(GateKind kind, int a, int b) {
  Gate g;
  g.kind = kind;
  g.targets = {a, b};
  return g;
}

Gate Gate::custom_gate(ComplexMatrix matrix, std::vector<int> targets) {
  Gate g;
  g.kind = GateKind::kCustom;
  g.targets = std::move(targets);
  g.custom = std::move(matrix);
  return g;
}

ComplexMatrix gate_matrix(const Gate& g) {
  const double half = g.params.empty() ? 0.0 : g.params[0] / 2.0;
  switch (g.kind) {
    case GateKind::kI:
      return ComplexMatrix::identity(2);
    case GateKind::kX:
      return sigma_x();
    case GateKind::kY:
      return sigma_y();
    case GateKind::kZ:
      return sigma_z();
    case GateKind::kH: {
      ComplexMatrix m(2, 2);
      m(0, 0) = kSqrtHalf;
      m(0, 1) = kSqrtHalf;
      m(1, 0) = kSqrtHalf;
      m(1, 1) = -kSqrtHalf;
      return m;
    }
    case GateKind::kS: {
      ComplexMatrix m(2, 2);
      m(0, 0) = 1.0;
      m(1, 1) = Complex(0.0, 1.0);
      return m;
    }
    case GateKind::kT: {
      ComplexMatrix m(2, 2);
      m(0, 0) = 1.0;
      m(1, 1) = std::polar(1.0, M_PI / 4.0);
      return m;
    }
    case GateKind::kRX: {
      ComplexMatrix m(2, 2);
      m(0, 0) = std::cos(half);
      m(0, 1) = Complex(0.0, -std::sin(half));
      m(1, 0) = Complex(0.0, -std::sin(half));
      m(1, 1) = std::cos(half);
      return m;
    }
    case GateKind::kRY: {
      ComplexMatrix m(2, 2);
      m(0, 0) = std::cos(half);
      m(0, 1) = -std::sin(half);
      m(1, 0) = std::sin(half);
      m(1, 1) = std::cos(half);
      return m;
    }
    case GateKind::kRZ: {
      ComplexMatrix m(2, 2);
      m(0, 0) = std::polar(1.0, -half);
      m(1, 1) = std::polar(1.0, half);
      return m;
    }
    case GateKind::kCNOT: {
      ComplexMatrix m(4, 4);
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      m(2, 3) = 1.0;
      m(3, 2) = 1.0;
      return m;
    }
    case GateKind::kCZ: {
      ComplexMatrix m = ComplexMatrix::identity(4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateKind::kSWAP: {
      ComplexMatrix m(4, 4);
      m(0, 0) = 1.0;
      m(1, 2) = 1.0;
      m(2, 1) = 1.0;
      m(3, 3) = 1.0;
      return m;
    }
    case GateKind::kCustom:
      if (!g.custom) {
        throw std::invalid_argument("CUSTOM gate is missing its matrix");
      }
      return *g.custom;
  }
  throw std::logic_error("gate_matrix: unreachable");
}

void validate_gate(const Gate& g, int n) {
  int arity = named_gate_arity(g.kind);
  if (g.kind == GateKind::kCustom) {
    if (!g.custom || !g.custom->is_square() || g.custom->rows() == 0) {
      throw std::invalid_argument("CUSTOM gate needs a square matrix");
    }
    const std::size_t dim = g.custom->rows();
    if ((dim & (dim - 1)) != 0) {
      throw std::invalid_argument("CUSTOM gate dimension must be a power of 2");
    }
    arity = 0;
    for (std::size_t d = dim; d > 1; d >>= 1) ++arity;
  }
  if (static_cast<int>(g.targets.size()) != arity) {
    throw std::invalid_argument("gate " + gate_name(g.kind) + " expects " +
                                std::to_string(arity) + " target(s), got " +
                                std::to_string(g.targets.size()));
  }
  if (static_cast<int>(g.params.size()) != param_count(g.kind)) {
    throw std::invalid_argument("gate " + gate_name(g.kind) +
                                " has the wrong parameter count");
  }
  std::set<int> seen;
  for (int t : g.targets) {
    if (t < 0 || t >= n) {
      throw std::out_of_range("gate target " + std::to_string(t) +
                              " out of range for " + std::to_string(n) +
                              " qubits");
    }
    if (!seen.insert(t).second) {
      throw std::invalid_argument("gate targets must be distinct");
    }
  }
  if (!is_unitary(gate_matrix(g), kUnitaryTol)) {
    throw std::invalid_argument("gate " + gate_name(g.kind) +
                                " matrix is not unitary");
  }
}

void validate_circuit(const Circuit& c) {
  if (c.n < 1) {
    throw std::invalid_argument("circuit needs at least 1 qubit");
  }
  for (const Gate& g : c.ops) {
    validate_gate(g, c.n);
  }
}

}  // namespace dhsim
