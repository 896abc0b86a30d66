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

#include "dhsim/descriptor_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dhsim/errors.hpp"
#include "dhsim/tensor.hpp"

namespace dhsim {

namespace {

std::size_t pow2(int n) { return std::size_t(1) << n; }

int slot(int qubit, Axis a) { return 3 * qubit + static_cast<int>(a); }

std::string qubit_axis_label(int qubit, Axis a) {
  static const char* names[3] = {"x", "y", "z"};
  return "qubit " + std::to_string(qubit) + " axis " +
         names[static_cast<int>(a)];
}

}  // namespace

PauliLetter axis_letter(Axis a) {
  switch (a) {
    case Axis::X: return PauliLetter::X;
    case Axis::Y: return PauliLetter::Y;
    case Axis::Z: return PauliLetter::Z;
  }
  throw std::logic_error("axis_letter: unreachable");
}

Axis axis_from_letter(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::X: return Axis::X;
    case PauliLetter::Y: return Axis::Y;
    case PauliLetter::Z: return Axis::Z;
    case PauliLetter::I: break;
  }
  throw std::invalid_argument("axis_from_letter: identity has no axis");
}

DescriptorState DescriptorState::init(int n, Backend backend, Limits limits) {
  if (n < 1) {
    throw std::invalid_argument("DescriptorState::init: need at least 1 qubit");
  }
  if (backend == Backend::kDense && n > limits.dense_cap) {
    throw CapExceeded("DescriptorState::init: " + std::to_string(n) +
                      " qubits exceeds dense cap " +
                      std::to_string(limits.dense_cap));
  }
  std::vector<ComplexMatrix> dense;
  std::vector<PauliSum> sums;
  if (backend == Backend::kDense) {
    dense.reserve(3 * n);
    for (int q = 0; q < n; ++q) {
      for (Axis a : kAxes) {
        dense.push_back(embed_single_site(pauli_matrix(axis_letter(a)), q, n));
      }
    }
  } else {
    sums.reserve(3 * n);
    for (int q = 0; q < n; ++q) {
      for (Axis a : kAxes) {
        sums.push_back(PauliSum::single(
            n, 1.0, PauliString::single(n, q, axis_letter(a))));
      }
    }
  }
  std::optional<ComplexMatrix> frame;
  if (n <= limits.dense_cap) {
    frame = ComplexMatrix::identity(pow2(n));
  }
  return DescriptorState(n, backend, limits, std::move(dense), std::move(sums),
                         std::move(frame));
}

DescriptorState::DescriptorState(int n, Backend backend, Limits limits,
                                 std::vector<ComplexMatrix> dense_triples,
                                 std::vector<PauliSum> pauli_triples,
                                 std::optional<ComplexMatrix> tracked_unitary)
    : n_(n),
      backend_(backend),
      limits_(limits),
      dense_(std::move(dense_triples)),
      sums_(std::move(pauli_triples)),
      frame_(std::move(tracked_unitary)) {
  const std::size_t want = 3 * std::size_t(n_);
  if (backend_ == Backend::kDense) {
    if (dense_.size() != want || !sums_.empty()) {
      throw std::invalid_argument(
          "DescriptorState: dense backend needs exactly 3n dense triples");
    }
    for (const ComplexMatrix& m : dense_) {
      if (m.rows() != pow2(n_) || m.cols() != pow2(n_)) {
        throw std::invalid_argument(
            "DescriptorState: descriptor dimension is not 2^n");
      }
    }
  } else {
    if (sums_.size() != want || !dense_.empty()) {
      throw std::invalid_argument(
          "DescriptorState: pauli backend needs exactly 3n Pauli sums");
    }
    for (const PauliSum& s : sums_) {
      if (s.num_qubits() != n_) {
        throw std::invalid_argument(
            "DescriptorState: Pauli descriptor length mismatch");
      }
    }
  }
  if (frame_ && (frame_->rows() != pow2(n_) || frame_->cols() != pow2(n_))) {
    throw std::invalid_argument(
        "DescriptorState: tracked unitary dimension is not 2^n");
  }
}

const ComplexMatrix& DescriptorState::dense_descriptor(int qubit,
                                                       Axis a) const {
  if (backend_ != Backend::kDense) {
    throw std::logic_error("dense_descriptor: state uses the pauli backend");
  }
  if (qubit < 0 || qubit >= n_) {
    throw std::out_of_range("dense_descriptor: qubit out of range");
  }
  return dense_[slot(qubit, a)];
}

const PauliSum& DescriptorState::pauli_descriptor(int qubit, Axis a) const {
  if (backend_ != Backend::kPauliSum) {
    throw std::logic_error("pauli_descriptor: state uses the dense backend");
  }
  if (qubit < 0 || qubit >= n_) {
    throw std::out_of_range("pauli_descriptor: qubit out of range");
  }
  return sums_[slot(qubit, a)];
}

const ComplexMatrix& DescriptorState::tracked_unitary() const {
  if (!frame_) {
    throw std::logic_error("tracked_unitary: state is untracked");
  }
  return *frame_;
}

void DescriptorState::validate(const DescriptorTolerances& tol) const {
  auto fail = [](const std::string& what) {
    throw std::invalid_argument("descriptor invariant violated: " + what);
  };

  if (backend_ == Backend::kDense) {
    const ComplexMatrix eye = ComplexMatrix::identity(pow2(n_));
    for (int q = 0; q < n_; ++q) {
      for (Axis a : kAxes) {
        const ComplexMatrix& x = dense_[slot(q, a)];
        if (!is_hermitian(x, tol.hermitian)) {
          fail("not Hermitian at " + qubit_axis_label(q, a));
        }
        if (max_norm_diff(x * x, eye) > tol.square_identity) {
          fail("square is not identity at " + qubit_axis_label(q, a));
        }
      }
      // x * y = i z and cyclic permutations.
      const ComplexMatrix& x = dense_[slot(q, Axis::X)];
      const ComplexMatrix& y = dense_[slot(q, Axis::Y)];
      const ComplexMatrix& z = dense_[slot(q, Axis::Z)];
      if (max_norm_diff(x * y, z * Complex(0.0, 1.0)) > tol.square_identity ||
          max_norm_diff(y * z, x * Complex(0.0, 1.0)) > tol.square_identity ||
          max_norm_diff(z * x, y * Complex(0.0, 1.0)) > tol.square_identity) {
        fail("single-qubit Pauli algebra broken at qubit " + std::to_string(q));
      }
    }
    for (int q1 = 0; q1 < n_; ++q1) {
      for (int q2 = q1 + 1; q2 < n_; ++q2) {
        for (Axis a : kAxes) {
          for (Axis b : kAxes) {
            const ComplexMatrix& xa = dense_[slot(q1, a)];
            const ComplexMatrix& xb = dense_[slot(q2, b)];
            if (max_norm_diff(xa * xb, xb * xa) > tol.cross_commute) {
              fail("descriptors of qubits " + std::to_string(q1) + " and " +
                   std::to_string(q2) + " do not commute");
            }
          }
        }
      }
    }
    if (frame_) {
      for (int q = 0; q < n_; ++q) {
        for (Axis a : kAxes) {
          const ComplexMatrix expected = conjugate_by(
              *frame_, embed_single_site(pauli_matrix(axis_letter(a)), q, n_));
          if (max_norm_diff(expected, dense_[slot(q, a)]) >
              tol.frame_consistency) {
            fail("tracked unitary does not reproduce " +
                 qubit_axis_label(q, a));
          }
        }
      }
    }
    return;
  }

  // Pauli-sum backend: same checks in the string algebra.
  const PauliSum identity =
      PauliSum::single(n_, 1.0, PauliString(n_));
  for (int q = 0; q < n_; ++q) {
    for (Axis a : kAxes) {
      const PauliSum& x = sums_[slot(q, a)];
      if (x.is_zero()) {
        fail("zero Pauli sum at " + qubit_axis_label(q, a) +
             " (square cannot be the identity)");
      }
      if (!x.is_hermitian(tol.hermitian)) {
        fail("not Hermitian at " + qubit_axis_label(q, a));
      }
      if (coeff_distance(x * x, identity) > tol.square_identity) {
        fail("square is not identity at " + qubit_axis_label(q, a));
      }
    }
    const PauliSum& x = sums_[slot(q, Axis::X)];
    const PauliSum& y = sums_[slot(q, Axis::Y)];
    const PauliSum& z = sums_[slot(q, Axis::Z)];
    if (coeff_distance(x * y, z * Complex(0.0, 1.0)) > tol.square_identity ||
        coeff_distance(y * z, x * Complex(0.0, 1.0)) > tol.square_identity ||
        coeff_distance(z * x, y * Complex(0.0, 1.0)) > tol.square_identity) {
      fail("single-qubit Pauli algebra broken at qubit " + std::to_string(q));
    }
  }
  for (int q1 = 0; q1 < n_; ++q1) {
    for (int q2 = q1 + 1; q2 < n_; ++q2) {
      for (Axis a : kAxes) {
        for (Axis b : kAxes) {
          const PauliSum& xa = sums_[slot(q1, a)];
          const PauliSum& xb = sums_[slot(q2, b)];
          if (coeff_distance(xa * xb, xb * xa) > tol.cross_commute) {
            fail("descriptors of qubits " + std::to_string(q1) + " and " +
                 std::to_string(q2) + " do not commute");
          }
        }
      }
    }
  }
  if (frame_ && n_ <= limits_.dense_cap) {
    for (int q = 0; q < n_; ++q) {
      for (Axis a : kAxes) {
        const ComplexMatrix expected = conjugate_by(
            *frame_, embed_single_site(pauli_matrix(axis_letter(a)), q, n_));
        if (max_norm_diff(expected, pauli_sum_matrix(sums_[slot(q, a)])) >
            tol.frame_consistency) {
          fail("tracked unitary does not reproduce " + qubit_axis_label(q, a));
        }
      }
    }
  }
}

Complex expectation(const DescriptorState& state, const PauliSum& obs) {
  if (obs.num_qubits() != state.num_qubits()) {
    throw std::invalid_argument(
        "expectation: observable length does not match qubit count");
  }
  const int n = state.num_qubits();
  Complex acc(0.0, 0.0);
  if (state.backend() == Backend::kDense) {
    const std::vector<Complex> ref = reference_vector(n);
    for (const PauliTerm& term : obs.terms()) {
      std::vector<Complex> v = ref;
      // <0|X_{q1} ... X_{qk}|0> applied right to left.
      for (int q = n - 1; q >= 0; --q) {
        const PauliLetter letter = term.string.letter(q);
        if (letter == PauliLetter::I) continue;
        v = state.dense_descriptor(q, axis_from_letter(letter)).apply(v);
      }
      acc += term.coeff * v[0];
    }
    return acc;
  }
  for (const PauliTerm& term : obs.terms()) {
    PauliSum realized = PauliSum::single(n, 1.0, PauliString(n));
    for (int q = 0; q < n; ++q) {
      const PauliLetter letter = term.string.letter(q);
      if (letter == PauliLetter::I) continue;
      realized = realized * state.pauli_descriptor(q, axis_from_letter(letter));
    }
    acc += term.coeff * vacuum_expectation(realized);
  }
  return acc;
}

Complex expectation(const DescriptorState& state, const PauliString& obs) {
  return expectation(state, PauliSum::single(state.num_qubits(), 1.0, obs));
}

ComplexMatrix reduced_density(const DescriptorState& state,
                              const std::set<int>& subset) {
  const int n = state.num_qubits();
  if (subset.empty()) {
    throw std::invalid_argument("reduced_density: empty subset");
  }
  for (int q : subset) {
    if (q < 0 || q >= n) {
      throw std::out_of_range("reduced_density: qubit out of range");
    }
  }
  const int k = static_cast<int>(subset.size());
  if (k > state.limits().reconstruction_cap) {
    throw CapExceeded("reduced_density: subset size " + std::to_string(k) +
                      " exceeds reconstruction cap " +
                      std::to_string(state.limits().reconstruction_cap));
  }
  const std::vector<int> qubits(subset.begin(), subset.end());
  const std::size_t dim = pow2(k);
  ComplexMatrix rho(dim, dim);
  const std::size_t total = std::size_t(1) << (2 * k);
  for (std::size_t ordinal = 0; ordinal < total; ++ordinal) {
    const PauliString local = pauli_string_from_ordinal(ordinal, k);
    PauliString full(n);
    for (int i = 0; i < k; ++i) {
      full.set_letter(qubits[i], local.letter(i));
    }
    const Complex value = expectation(state, full);
    if (std::abs(value) < kCoeffDropTol) continue;
    const ComplexMatrix p = pauli_string_matrix(local);
    rho += p * (value / double(dim));
  }
  return rho;
}

std::set<int> footprint(const DescriptorState& state, double tol) {
  const int n = state.num_qubits();
  std::set<int> moved;
  for (int q = 0; q < n; ++q) {
    for (Axis a : kAxes) {
      if (state.backend() == Backend::kDense) {
        const ComplexMatrix fresh =
            embed_single_site(pauli_matrix(axis_letter(a)), q, n);
        if (max_norm_diff(state.dense_descriptor(q, a), fresh) > tol) {
          moved.insert(q);
          break;
        }
      } else {
        const PauliSum fresh = PauliSum::single(
            n, 1.0, PauliString::single(n, q, axis_letter(a)));
        if (coeff_distance(state.pauli_descriptor(q, a), fresh) > tol) {
          moved.insert(q);
          break;
        }
      }
    }
  }
  return moved;
}

DescriptorState to_dense(const DescriptorState& state) {
  if (state.backend() == Backend::kDense) return state;
  const int n = state.num_qubits();
  if (n > state.limits().dense_cap) {
    throw CapExceeded("to_dense: " + std::to_string(n) +
                      " qubits exceeds dense cap " +
                      std::to_string(state.limits().dense_cap));
  }
  std::vector<ComplexMatrix> dense;
  dense.reserve(state.pauli_triples().size());
  for (const PauliSum& s : state.pauli_triples()) {
    dense.push_back(pauli_sum_matrix(s));
  }
  std::optional<ComplexMatrix> frame;
  if (state.has_tracked_unitary()) frame = state.tracked_unitary();
  return DescriptorState(n, Backend::kDense, state.limits(), std::move(dense),
                         {}, std::move(frame));
}

DescriptorState to_pauli_sum(const DescriptorState& state) {
  if (state.backend() == Backend::kPauliSum) return state;
  const int n = state.num_qubits();
  if (n > state.limits().decomp_cap) {
    throw CapExceeded("to_pauli_sum: " + std::to_string(n) +
                      " qubits exceeds decomposition cap " +
                      std::to_string(state.limits().decomp_cap));
  }
  std::vector<PauliSum> sums;
  sums.reserve(state.dense_triples().size());
  for (const ComplexMatrix& m : state.dense_triples()) {
    PauliSum s = pauli_decompose(m, n);
    if (s.term_count() > state.limits().term_cap) {
      throw CapExceeded("to_pauli_sum: descriptor needs " +
                        std::to_string(s.term_count()) +
                        " terms, cap is " +
                        std::to_string(state.limits().term_cap));
    }
    sums.push_back(std::move(s));
  }
  std::optional<ComplexMatrix> frame;
  if (state.has_tracked_unitary()) frame = state.tracked_unitary();
  return DescriptorState(n, Backend::kPauliSum, state.limits(), {},
                         std::move(sums), std::move(frame));
}

}  // namespace dhsim
