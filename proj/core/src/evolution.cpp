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

#include "dhsim/evolution.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "dhsim/errors.hpp"
#include "dhsim/tensor.hpp"

namespace dhsim {

namespace {

int slot(int qubit, Axis a) { return 3 * qubit + static_cast<int>(a); }

// Sum_P c_P * (product of current dense descriptors named by P's letters),
// for a Pauli sum living on the gate-local slots of `targets`.
ComplexMatrix realize_local_dense(const DescriptorState& state,
                                  const PauliSum& local,
                                  const std::vector<int>& targets) {
  const std::size_t dim = std::size_t(1) << state.num_qubits();
  ComplexMatrix acc(dim, dim);
  for (const PauliTerm& term : local.terms()) {
    ComplexMatrix prod = ComplexMatrix::identity(dim);
    bool any = false;
    for (int p = 0; p < term.string.size(); ++p) {
      const PauliLetter letter = term.string.letter(p);
      if (letter == PauliLetter::I) continue;
      const ComplexMatrix& d =
          state.dense_descriptor(targets[p], axis_from_letter(letter));
      prod = any ? prod * d : d;
      any = true;
    }
    acc += prod * term.coeff;
  }
  return acc;
}

// Same realization in the Pauli-sum algebra.
PauliSum realize_local_pauli(const DescriptorState& state,
                             const PauliSum& local,
                             const std::vector<int>& targets) {
  const int n = state.num_qubits();
  PauliSum acc(n);
  for (const PauliTerm& term : local.terms()) {
    PauliSum prod = PauliSum::single(n, term.coeff, PauliString(n));
    for (int p = 0; p < term.string.size(); ++p) {
      const PauliLetter letter = term.string.letter(p);
      if (letter == PauliLetter::I) continue;
      prod = prod * state.pauli_descriptor(targets[p], axis_from_letter(letter));
    }
    acc = acc + prod;
  }
  return acc;
}

void check_term_cap(const PauliSum& sum, std::size_t cap) {
  if (sum.term_count() > cap) {
    throw CapExceeded("pauli-sum descriptor needs " +
                      std::to_string(sum.term_count()) + " terms, cap is " +
                      std::to_string(cap));
  }
}

std::vector<ComplexMatrix> scaled_sum(const std::vector<ComplexMatrix>& base,
                                      const std::vector<ComplexMatrix>& dir,
                                      double factor) {
  std::vector<ComplexMatrix> out;
  out.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    out.push_back(base[i] + dir[i] * Complex(factor, 0.0));
  }
  return out;
}

}  // namespace

HamiltonianSpec make_hamiltonian(PauliSum terms) {
  if (!terms.is_hermitian()) {
    throw std::invalid_argument(
        "hamiltonian must be Hermitian (real Pauli coefficients)");
  }
  return HamiltonianSpec{std::move(terms)};
}

DescriptorState apply_gate(const DescriptorState& state, const Gate& g) {
  const int n = state.num_qubits();
  validate_gate(g, n);
  if (g.kind == GateKind::kI) {
    return state;
  }
  const ComplexMatrix u_loc = gate_matrix(g);
  const int k = static_cast<int>(g.targets.size());

  if (state.backend() == Backend::kDense) {
    std::vector<ComplexMatrix> dense = state.dense_triples();
    std::optional<ComplexMatrix> frame;
    if (state.has_tracked_unitary()) {
      // Heisenberg accumulation: W' = U_emb W, and each target descriptor
      // is rebuilt as W'^dagger (embedded Pauli) W'. Non-target triples
      // are untouched.
      ComplexMatrix w = embed_gate(u_loc, g.targets, n) * state.tracked_unitary();
      for (int q : g.targets) {
        for (Axis a : kAxes) {
          dense[slot(q, a)] = conjugate_by(
              w, embed_single_site(pauli_matrix(axis_letter(a)), q, n));
        }
      }
      frame = std::move(w);
    } else {
      // No frame: express the gate in the current descriptors and
      // conjugate the target triples directly.
      const ComplexMatrix u_frame =
          realize_local_dense(state, pauli_decompose(u_loc, k), g.targets);
      for (int q : g.targets) {
        for (Axis a : kAxes) {
          dense[slot(q, a)] =
              conjugate_by(u_frame, state.dense_descriptor(q, a));
        }
      }
    }
    return DescriptorState(n, Backend::kDense, state.limits(),
                           std::move(dense), {}, std::move(frame));
  }

  // Pauli-sum backend: conjugate the embedded target Paulis by the raw
  // gate locally, then realize each resulting string with the current
  // descriptors.
  std::vector<PauliSum> sums = state.pauli_triples();
  for (int p = 0; p < k; ++p) {
    const int q = g.targets[p];
    for (Axis a : kAxes) {
      const ComplexMatrix conj_local = conjugate_by(
          u_loc, pauli_string_matrix(PauliString::single(k, p, axis_letter(a))));
      PauliSum updated =
          realize_local_pauli(state, pauli_decompose(conj_local, k), g.targets);
      check_term_cap(updated, state.limits().term_cap);
      sums[slot(q, a)] = std::move(updated);
    }
  }
  std::optional<ComplexMatrix> frame;
  if (state.has_tracked_unitary()) {
    frame = embed_gate(u_loc, g.targets, n) * state.tracked_unitary();
  }
  return DescriptorState(n, Backend::kPauliSum, state.limits(), {},
                         std::move(sums), std::move(frame));
}

DescriptorState run_circuit(const DescriptorState& state, const Circuit& c) {
  if (c.n != state.num_qubits()) {
    throw std::invalid_argument("run_circuit: qubit count mismatch");
  }
  DescriptorState out = state;
  for (const Gate& g : c.ops) {
    out = apply_gate(out, g);
  }
  return out;
}

DescriptorState evolve_hamiltonian(const DescriptorState& state,
                                   const HamiltonianSpec& h, double t) {
  const int n = state.num_qubits();
  if (h.terms.num_qubits() != n) {
    throw std::invalid_argument("evolve_hamiltonian: qubit count mismatch");
  }
  if (!h.terms.is_hermitian()) {
    throw std::invalid_argument(
        "evolve_hamiltonian: hamiltonian must be Hermitian");
  }
  std::set<int> support;
  for (const PauliTerm& term : h.terms.terms()) {
    for (int q : term.string.support()) support.insert(q);
  }
  if (support.empty() || t == 0.0) {
    return state;
  }
  const std::vector<int> targets(support.begin(), support.end());
  const int k = static_cast<int>(targets.size());
  // Identity terms shift the energy origin only; they drop out of the
  // conjugation.
  std::vector<PauliTerm> local_terms;
  for (const PauliTerm& term : h.terms.terms()) {
    if (term.string.is_identity()) continue;
    PauliString local(k);
    for (int p = 0; p < k; ++p) {
      local.set_letter(p, term.string.letter(targets[p]));
    }
    local_terms.push_back({term.coeff, local});
  }
  const ComplexMatrix h_loc =
      pauli_sum_matrix(PauliSum::from_terms(k, std::move(local_terms)));
  const ComplexMatrix u_loc =
      mat_exp(h_loc * Complex(0.0, -kFlowCommutatorSign * t));
  return apply_gate(state, Gate::custom_gate(u_loc, targets));
}

DescriptorState integrate_gauged_flow(const DescriptorState& state0,
                                      const HamiltonianSpec& h,
                                      const GaugeFamily& fam, double t,
                                      double dt) {
  if (state0.backend() != Backend::kDense) {
    throw std::invalid_argument(
        "integrate_gauged_flow: dense backend required");
  }
  if (dt <= 0.0) {
    throw std::invalid_argument("integrate_gauged_flow: dt must be positive");
  }
  const int n = state0.num_qubits();
  if (h.terms.num_qubits() != n) {
    throw std::invalid_argument("integrate_gauged_flow: qubit count mismatch");
  }
  if (!h.terms.is_hermitian()) {
    throw std::invalid_argument(
        "integrate_gauged_flow: hamiltonian must be Hermitian");
  }
  validate_family_structure(fam);
  // Stabilizer condition sampled along [0, t].
  const int kSamples = 8;
  for (int i = 0; i <= kSamples; ++i) {
    const double ts = t * double(i) / double(kSamples);
    validate_gauge(gauge_family_value(fam, ts), 1e-8);
  }
  // The primed trajectory starts at V(0)^dagger X(0) V(0); for
  // exponential families V(0) is the identity.
  const DescriptorState primed0 =
      apply_gauge(state0, gauge_family_value(fam, 0.0));
  if (t == 0.0) {
    return primed0;
  }

  auto rhs = [&](const std::vector<ComplexMatrix>& x, double time) {
    const std::size_t dim = std::size_t(1) << n;
    ComplexMatrix hmat(dim, dim);
    for (const PauliTerm& term : h.terms.terms()) {
      if (term.string.is_identity()) continue;  // commutes with everything
      ComplexMatrix prod;
      bool any = false;
      for (int q = 0; q < n; ++q) {
        const PauliLetter letter = term.string.letter(q);
        if (letter == PauliLetter::I) continue;
        const ComplexMatrix& d = x[slot(q, axis_from_letter(letter))];
        prod = any ? prod * d : d;
        any = true;
      }
      hmat += prod * term.coeff;
    }
    const ComplexMatrix vel = frame_velocity(fam, time);
    std::vector<ComplexMatrix> d;
    d.reserve(x.size());
    for (const ComplexMatrix& xi : x) {
      const ComplexMatrix comm_h = hmat * xi - xi * hmat;
      const ComplexMatrix comm_vel = xi * vel - vel * xi;
      d.push_back(comm_h * Complex(0.0, kFlowCommutatorSign) + comm_vel);
    }
    return d;
  };

  std::vector<ComplexMatrix> y = primed0.dense_triples();
  double time = 0.0;
  while (time < t - 1e-12) {
    const double step = std::min(dt, t - time);
    const auto k1 = rhs(y, time);
    const auto k2 = rhs(scaled_sum(y, k1, step / 2.0), time + step / 2.0);
    const auto k3 = rhs(scaled_sum(y, k2, step / 2.0), time + step / 2.0);
    const auto k4 = rhs(scaled_sum(y, k3, step), time + step);
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += (k1[i] + (k2[i] + k3[i]) * Complex(2.0, 0.0) + k4[i]) *
              Complex(step / 6.0, 0.0);
    }
    time += step;
  }
  // The integrated triples no longer come from an exact conjugation, so
  // the result carries no tracked unitary.
  return DescriptorState(n, Backend::kDense, state0.limits(), std::move(y), {},
                         std::nullopt);
}

std::vector<Complex> schrodinger_oracle(const Circuit& c, Limits limits) {
  if (c.n > limits.dense_cap) {
    throw CapExceeded("schrodinger_oracle: " + std::to_string(c.n) +
                      " qubits exceeds dense cap " +
                      std::to_string(limits.dense_cap));
  }
  validate_circuit(c);
  const int n = c.n;
  const std::size_t dim = std::size_t(1) << n;
  std::vector<Complex> v = reference_vector(n);
  for (const Gate& g : c.ops) {
    const ComplexMatrix u = gate_matrix(g);
    const int k = static_cast<int>(g.targets.size());
    const std::size_t local_dim = std::size_t(1) << k;
    auto qshift = [&](int q) { return n - 1 - q; };
    std::vector<Complex> next(dim, Complex(0.0, 0.0));
    for (std::size_t full = 0; full < dim; ++full) {
      std::size_t iloc = 0;
      std::size_t rest = full;
      for (int p = 0; p < k; ++p) {
        const std::size_t bit = (full >> qshift(g.targets[p])) & 1u;
        iloc |= bit << (k - 1 - p);
        rest &= ~(std::size_t(1) << qshift(g.targets[p]));
      }
      Complex acc(0.0, 0.0);
      for (std::size_t jloc = 0; jloc < local_dim; ++jloc) {
        const Complex w = u(iloc, jloc);
        if (w == Complex(0.0, 0.0)) continue;
        std::size_t col = rest;
        for (int p = 0; p < k; ++p) {
          const std::size_t bit = (jloc >> (k - 1 - p)) & 1u;
          col |= bit << qshift(g.targets[p]);
        }
        acc += w * v[col];
      }
      next[full] = acc;
    }
    v = std::move(next);
  }
  return v;
}

}  // namespace dhsim
