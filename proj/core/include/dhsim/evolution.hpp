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
// Dynamics in the Heisenberg picture: gates and Hamiltonian flows act on
// the descriptors while the reference vector stays fixed. A conventional
// state-vector simulator is provided as an independent cross-check.

#ifndef DHSIM_EVOLUTION_HPP
#define DHSIM_EVOLUTION_HPP

#include <vector>

#include "dhsim/complex_matrix.hpp"
#include "dhsim/descriptor_state.hpp"
#include "dhsim/gate.hpp"
#include "dhsim/gauge.hpp"
#include "dhsim/limits.hpp"
#include "dhsim/pauli.hpp"

namespace dhsim {

/// Sign s in the descriptor equation of motion dX/dt = s * i * [H, X].
/// The implemented convention is s = -1, so X(t) = e^{-iHt} X e^{+iHt};
/// finite-difference tests pin the orientation.
inline constexpr double kFlowCommutatorSign = -1.0;

struct HamiltonianSpec {
  PauliSum terms;
};

/// Validates Hermiticity (real coefficients within 1e-12).
HamiltonianSpec make_hamiltonian(PauliSum terms);

/// Heisenberg update: each target descriptor becomes U^dagger X U with U
/// the gate unitary expressed in the current frame; descriptors of
/// non-target qubits are returned untouched (bit-for-bit in the dense
/// backend). The tracked unitary picks up the gate.
DescriptorState apply_gate(const DescriptorState& state, const Gate& g);

/// Left-to-right fold of apply_gate; the empty circuit is the identity.
DescriptorState run_circuit(const DescriptorState& state, const Circuit& c);

/// Exact flow of dX/dt = kFlowCommutatorSign * i * [H, X] for duration t,
/// realized as conjugation by the matrix exponential on the Hamiltonian's
/// support qubits.
DescriptorState evolve_hamiltonian(const DescriptorState& state,
                                   const HamiltonianSpec& h, double t);

/// Fixed-step 4th-order integration of the gauge-modified flow
///   dX'/dt = kFlowCommutatorSign * i * [H(X'), X'] + [X', V^dagger dV/dt],
/// with H evaluated as the Pauli-sum functional of the primed descriptors.
/// Matches the closed form V(t)^dagger X(t) V(t) with global error
/// O(dt^4). Dense backend only; the family's stabilizer condition is
/// checked at sampled times (tolerance 1e-8).
DescriptorState integrate_gauged_flow(const DescriptorState& state0,
                                      const HamiltonianSpec& h,
                                      const GaugeFamily& fam, double t,
                                      double dt);

/// Conventional-picture reference: U_c |0...0> by direct matrix-vector
/// application, gate by gate.
std::vector<Complex> schrodinger_oracle(const Circuit& c, Limits limits = {});

}  // namespace dhsim

#endif  // DHSIM_EVOLUTION_HPP
