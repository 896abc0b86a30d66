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
// The Heisenberg-picture state of a qubit register: one Hermitian operator
// triple (x, y, z) per qubit, evaluated against the fixed reference vector
// |0...0>. Two interchangeable backends carry the triples: dense matrices
// on the full space, or Pauli sums over the initial single-site Paulis.

#ifndef DHSIM_DESCRIPTOR_STATE_HPP
#define DHSIM_DESCRIPTOR_STATE_HPP

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "dhsim/complex_matrix.hpp"
#include "dhsim/limits.hpp"
#include "dhsim/pauli.hpp"

namespace dhsim {

enum class Backend { kDense, kPauliSum };

enum class Axis : int { X = 0, Y = 1, Z = 2 };
inline constexpr std::array<Axis, 3> kAxes = {Axis::X, Axis::Y, Axis::Z};

PauliLetter axis_letter(Axis a);
/// Inverse of axis_letter; the identity letter has no axis.
Axis axis_from_letter(PauliLetter letter);

/// Default tolerances for the descriptor invariants.
struct DescriptorTolerances {
  double hermitian = 1e-10;
  double square_identity = 1e-8;
  double cross_commute = 1e-8;
  double frame_consistency = 1e-8;
};

class DescriptorState {
 public:
  /// Fresh register: descriptor (x,y,z) of qubit i is the single-site
  /// Pauli embedded at slot i, and the tracked conjugating unitary is the
  /// identity (when the dimension permits storing it).
  static DescriptorState init(int n, Backend backend, Limits limits = {});

  /// Low-level constructor used by the engine and the snapshot loader;
  /// checks shapes only. Use validate() for the physical invariants.
  DescriptorState(int n, Backend backend, Limits limits,
                  std::vector<ComplexMatrix> dense_triples,
                  std::vector<PauliSum> pauli_triples,
                  std::optional<ComplexMatrix> tracked_unitary);

  int num_qubits() const { return n_; }
  Backend backend() const { return backend_; }
  const Limits& limits() const { return limits_; }

  const ComplexMatrix& dense_descriptor(int qubit, Axis a) const;
  const PauliSum& pauli_descriptor(int qubit, Axis a) const;

  const std::vector<ComplexMatrix>& dense_triples() const { return dense_; }
  const std::vector<PauliSum>& pauli_triples() const { return sums_; }

  bool has_tracked_unitary() const { return frame_.has_value(); }
  const ComplexMatrix& tracked_unitary() const;

  /// Checks every descriptor invariant (Hermiticity, squares to identity,
  /// the single-qubit Pauli algebra, cross-qubit commutation, consistency
  /// with the tracked unitary); throws std::invalid_argument on the first
  /// violation.
  void validate(const DescriptorTolerances& tol = {}) const;

 private:
  int n_ = 0;
  Backend backend_ = Backend::kDense;
  Limits limits_;
  std::vector<ComplexMatrix> dense_;  // 3n entries, slot 3*qubit + axis
  std::vector<PauliSum> sums_;        // likewise for the Pauli-sum backend
  std::optional<ComplexMatrix> frame_;
};

/// <0...0| O |0...0> where O substitutes each letter of each term by the
/// matching descriptor and multiplies slot-wise in ascending qubit order.
Complex expectation(const DescriptorState& state, const PauliSum& obs);
Complex expectation(const DescriptorState& state, const PauliString& obs);

/// Density operator of the chosen qubits, reconstructed purely from
/// descriptor expectations: rho = 2^-|S| sum_P <P> P over strings
/// supported in S.
ComplexMatrix reduced_density(const DescriptorState& state,
                              const std::set<int>& subset);

/// Qubits whose descriptor triple differs from the freshly initialized
/// triple by more than tol.
std::set<int> footprint(const DescriptorState& state, double tol = 1e-10);

DescriptorState to_dense(const DescriptorState& state);
DescriptorState to_pauli_sum(const DescriptorState& state);

}  // namespace dhsim

#endif  // DHSIM_DESCRIPTOR_STATE_HPP
