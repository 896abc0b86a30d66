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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dhsim/errors.hpp"
#include "dhsim/evolution.hpp"
#include "dhsim/tensor.hpp"
#include "test_support.hpp"

using namespace dhsim;
using dhsim::testing::random_circuit;
using dhsim::testing::state_vector_expectation;
using dhsim::testing::taylor_mat_exp;

namespace {

Circuit bell_circuit() {
  Circuit c;
  c.n = 2;
  c.ops = {Gate::single(GateKind::kH, 0), Gate::two(GateKind::kCNOT, 0, 1)};
  return c;
}

HamiltonianSpec z_hamiltonian(double coeff) {
  return make_hamiltonian(
      PauliSum::single(1, Complex(coeff, 0.0), PauliString("Z")));
}

DescriptorState strip_frame(const DescriptorState& state) {
  return DescriptorState(state.num_qubits(), state.backend(), state.limits(),
                         state.dense_triples(), state.pauli_triples(),
                         std::nullopt);
}

}  // namespace

TEST_CASE("single-qubit gate conjugation") {
  const DescriptorState fresh = DescriptorState::init(1, Backend::kDense);

  const DescriptorState h = apply_gate(fresh, Gate::single(GateKind::kH, 0));
  // 2x2 conjugation oracle.
  const ComplexMatrix hm = gate_matrix(Gate::single(GateKind::kH, 0));
  CHECK(max_norm_diff(h.dense_descriptor(0, Axis::Z),
                      conjugate_by(hm, sigma_z())) < 1e-15);
  CHECK(max_norm_diff(h.dense_descriptor(0, Axis::Z), sigma_x()) < 1e-15);
  CHECK(max_norm_diff(h.dense_descriptor(0, Axis::X), sigma_z()) < 1e-15);

  const DescriptorState x = apply_gate(fresh, Gate::single(GateKind::kX, 0));
  CHECK(max_norm_diff(x.dense_descriptor(0, Axis::Z),
                      sigma_z() * Complex(-1.0, 0.0)) < 1e-15);

  const DescriptorState same = apply_gate(fresh, Gate::single(GateKind::kI, 0));
  CHECK(same.dense_descriptor(0, Axis::X).data() ==
        fresh.dense_descriptor(0, Axis::X).data());
}

TEST_CASE("frameless states take the descriptor-expressed gate path") {
  const Circuit prefix = random_circuit(2, 6, 1234);
  const DescriptorState tracked =
      run_circuit(DescriptorState::init(2, Backend::kDense), prefix);
  const DescriptorState untracked = strip_frame(tracked);
  const Gate g = Gate::two(GateKind::kCNOT, 1, 0);
  const DescriptorState a = apply_gate(tracked, g);
  const DescriptorState b = apply_gate(untracked, g);
  for (int q = 0; q < 2; ++q) {
    for (Axis ax : kAxes) {
      CHECK(max_norm_diff(a.dense_descriptor(q, ax),
                          b.dense_descriptor(q, ax)) < 1e-10);
    }
  }
  CHECK_FALSE(b.has_tracked_unitary());
}

TEST_CASE("run_circuit basics") {
  const DescriptorState fresh = DescriptorState::init(2, Backend::kDense);
  const Circuit empty{2, {}};
  const DescriptorState same = run_circuit(fresh, empty);
  CHECK(max_norm_diff(same.dense_descriptor(1, Axis::Y),
                      fresh.dense_descriptor(1, Axis::Y)) == 0.0);

  const DescriptorState bell = run_circuit(fresh, bell_circuit());
  CHECK(expectation(bell, PauliString("ZZ")).real() ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(expectation(bell, PauliString("ZI"))) < 1e-12);

  Circuit hh{1, {Gate::single(GateKind::kH, 0), Gate::single(GateKind::kH, 0)}};
  const DescriptorState twice =
      run_circuit(DescriptorState::init(1, Backend::kDense), hh);
  const DescriptorState one = DescriptorState::init(1, Backend::kDense);
  for (Axis a : kAxes) {
    CHECK(max_norm_diff(twice.dense_descriptor(0, a),
                        one.dense_descriptor(0, a)) < 1e-10);
  }

  CHECK_THROWS_AS(run_circuit(fresh, Circuit{3, {}}), std::invalid_argument);
}

TEST_CASE("gates act only on their targets") {
  for (std::uint64_t seed = 70; seed < 78; ++seed) {
    const int n = 2 + int(seed % 3);
    const Circuit c = random_circuit(n, 20, seed);
    DescriptorState dense = DescriptorState::init(n, Backend::kDense);
    DescriptorState sparse = DescriptorState::init(n, Backend::kPauliSum);
    for (const Gate& g : c.ops) {
      const DescriptorState dense_next = apply_gate(dense, g);
      const DescriptorState sparse_next = apply_gate(sparse, g);
      const std::set<int> targets(g.targets.begin(), g.targets.end());
      for (int q = 0; q < n; ++q) {
        if (targets.count(q)) continue;
        for (Axis a : kAxes) {
          CHECK(max_norm_diff(dense_next.dense_descriptor(q, a),
                              dense.dense_descriptor(q, a)) < 1e-12);
          CHECK(coeff_distance(sparse_next.pauli_descriptor(q, a),
                               sparse.pauli_descriptor(q, a)) == 0.0);
        }
      }
      dense = dense_next;
      sparse = sparse_next;
    }
  }
}

TEST_CASE("descriptor expectations match the state-vector oracle") {
  for (std::uint64_t seed = 90; seed < 102; ++seed) {
    const int n = 1 + int(seed % 4);
    const Circuit c = random_circuit(n, 20, seed);
    const DescriptorState state =
        run_circuit(DescriptorState::init(n, Backend::kDense), c);
    const std::vector<Complex> psi = schrodinger_oracle(c);
    for (const PauliString& obs : dhsim::testing::small_support_observables(n)) {
      CHECK(std::abs(expectation(state, obs) -
                     state_vector_expectation(psi, obs)) < 1e-10);
    }
  }
}

TEST_CASE("zero Hamiltonian is the identity flow") {
  const DescriptorState fresh = DescriptorState::init(2, Backend::kDense);
  const HamiltonianSpec zero = make_hamiltonian(PauliSum(2));
  const DescriptorState same = evolve_hamiltonian(fresh, zero, 3.7);
  CHECK(same.dense_descriptor(0, Axis::X).data() ==
        fresh.dense_descriptor(0, Axis::X).data());
}

TEST_CASE("flow orientation: finite difference pins the sign") {
  // h = (omega/2) Z with omega = 1.
  const HamiltonianSpec h = z_hamiltonian(0.5);
  const ComplexMatrix h_mat = pauli_sum_matrix(h.terms);
  const DescriptorState fresh = DescriptorState::init(1, Backend::kDense);
  const double t = 0.4;
  const double delta = 1e-5;

  const ComplexMatrix x_t =
      evolve_hamiltonian(fresh, h, t).dense_descriptor(0, Axis::X);
  const ComplexMatrix x_plus =
      evolve_hamiltonian(fresh, h, t + delta).dense_descriptor(0, Axis::X);
  const ComplexMatrix x_minus =
      evolve_hamiltonian(fresh, h, t - delta).dense_descriptor(0, Axis::X);
  const ComplexMatrix derivative =
      (x_plus - x_minus) * Complex(1.0 / (2.0 * delta), 0.0);

  const ComplexMatrix commutator = h_mat * x_t - x_t * h_mat;
  const ComplexMatrix implemented = commutator * Complex(0.0, kFlowCommutatorSign);
  const ComplexMatrix flipped = commutator * Complex(0.0, -kFlowCommutatorSign);

  CHECK(max_norm_diff(derivative, implemented) < 1e-9);
  // The opposite orientation misses by twice the commutator norm.
  CHECK(max_norm_diff(derivative, flipped) > 0.5);
}

TEST_CASE("hamiltonian flow equals conjugation by the series exponential") {
  // h = (pi/4) X at t = 1, against an independent series oracle.
  const HamiltonianSpec h = make_hamiltonian(
      PauliSum::single(1, Complex(M_PI / 4.0, 0.0), PauliString("X")));
  const ComplexMatrix h_mat = pauli_sum_matrix(h.terms);
  const DescriptorState evolved =
      evolve_hamiltonian(DescriptorState::init(1, Backend::kDense), h, 1.0);
  // X(t) = e^{-iHt} X e^{+iHt} = U^dagger X U with U = e^{+iHt}.
  const ComplexMatrix u = taylor_mat_exp(h_mat * Complex(0.0, 1.0));
  for (Axis a : kAxes) {
    const ComplexMatrix expected = conjugate_by(
        u, DescriptorState::init(1, Backend::kDense).dense_descriptor(0, a));
    CHECK(max_norm_diff(evolved.dense_descriptor(0, a), expected) < 1e-10);
  }
}

TEST_CASE("hamiltonian flow composes in time") {
  const HamiltonianSpec h = make_hamiltonian(PauliSum::from_terms(
      2, {{Complex(0.45, 0.0), PauliString("ZZ")},
          {Complex(0.3, 0.0), PauliString("XI")}}));
  const DescriptorState fresh = DescriptorState::init(2, Backend::kDense);
  const DescriptorState direct = evolve_hamiltonian(fresh, h, 0.9);
  const DescriptorState split =
      evolve_hamiltonian(evolve_hamiltonian(fresh, h, 0.5), h, 0.4);
  for (int q = 0; q < 2; ++q) {
    for (Axis a : kAxes) {
      CHECK(max_norm_diff(direct.dense_descriptor(q, a),
                          split.dense_descriptor(q, a)) < 1e-9);
    }
  }
}

TEST_CASE("non-Hermitian Hamiltonians are rejected") {
  const PauliSum bad =
      PauliSum::single(1, Complex(0.5, 0.5), PauliString("Z"));
  CHECK_THROWS_AS(make_hamiltonian(bad), std::invalid_argument);
  const HamiltonianSpec forged{bad};
  CHECK_THROWS_AS(
      evolve_hamiltonian(DescriptorState::init(1, Backend::kDense), forged,
                         1.0),
      std::invalid_argument);
}

TEST_CASE("gauged flow: trivial families reduce to the plain flow") {
  const HamiltonianSpec h = z_hamiltonian(0.5);
  const DescriptorState fresh = DescriptorState::init(1, Backend::kDense);
  const DescriptorState plain = evolve_hamiltonian(fresh, h, 1.0);

  const GaugeFamily identity_fam =
      GaugeFamily::constant_family(GaugeTransform::identity(1));
  const DescriptorState integrated =
      integrate_gauged_flow(fresh, h, identity_fam, 1.0, 1e-3);
  for (Axis a : kAxes) {
    CHECK(max_norm_diff(integrated.dense_descriptor(0, a),
                        plain.dense_descriptor(0, a)) < 1e-7);
  }

  // A constant nontrivial gauge: the extra term vanishes and the flow is
  // covariant, so the result is the gauged plain flow.
  const GaugeTransform fixed = random_stabilizing_unitary(1, 5);
  const GaugeFamily const_fam = GaugeFamily::constant_family(fixed);
  const DescriptorState integrated2 =
      integrate_gauged_flow(fresh, h, const_fam, 1.0, 1e-3);
  const DescriptorState gauged_plain = apply_gauge(plain, fixed);
  for (Axis a : kAxes) {
    CHECK(max_norm_diff(integrated2.dense_descriptor(0, a),
                        gauged_plain.dense_descriptor(0, a)) < 1e-7);
  }
}

TEST_CASE("gauged flow matches the closed form") {
  const HamiltonianSpec h = z_hamiltonian(0.5);
  const GaugeFamily fam = GaugeFamily::exp_generator(
      PauliSum::single(1, Complex(0.7, 0.0), PauliString("Z")), 1.0);
  const DescriptorState fresh = DescriptorState::init(1, Backend::kDense);

  const DescriptorState integrated =
      integrate_gauged_flow(fresh, h, fam, 1.0, 1e-3);
  const DescriptorState closed =
      apply_gauge(evolve_hamiltonian(fresh, h, 1.0), gauge_family_value(fam, 1.0));
  double err = 0.0;
  for (Axis a : kAxes) {
    err = std::max(err, max_norm_diff(integrated.dense_descriptor(0, a),
                                      closed.dense_descriptor(0, a)));
  }
  CHECK(err <= 1e-6);
}

TEST_CASE("gauged flow integrator is fourth order") {
  const HamiltonianSpec h = make_hamiltonian(PauliSum::from_terms(
      2, {{Complex(0.6, 0.0), PauliString("ZZ")},
          {Complex(0.35, 0.0), PauliString("XI")},
          {Complex(0.2, 0.0), PauliString("IY")}}));
  const GaugeFamily fam = GaugeFamily::exp_generator(
      PauliSum::from_terms(2, {{Complex(0.7, 0.0), PauliString("ZI")},
                               {Complex(0.4, 0.0), PauliString("IZ")},
                               {Complex(0.25, 0.0), PauliString("ZZ")}}),
      1.0);
  const DescriptorState fresh = DescriptorState::init(2, Backend::kDense);
  const DescriptorState closed = apply_gauge(evolve_hamiltonian(fresh, h, 1.0),
                                             gauge_family_value(fam, 1.0));

  auto error_at = [&](double dt) {
    const DescriptorState integrated =
        integrate_gauged_flow(fresh, h, fam, 1.0, dt);
    double err = 0.0;
    for (std::size_t i = 0; i < closed.dense_triples().size(); ++i) {
      err = std::max(err, max_norm_diff(integrated.dense_triples()[i],
                                        closed.dense_triples()[i]));
    }
    return err;
  };

  const double coarse = error_at(0.1);
  const double fine = error_at(0.05);
  const double ratio = coarse / fine;
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 32.0);
}

TEST_CASE("gauged flow rejects bad inputs") {
  const HamiltonianSpec h = z_hamiltonian(0.5);
  const GaugeFamily fam =
      GaugeFamily::constant_family(GaugeTransform::identity(1));
  const DescriptorState fresh = DescriptorState::init(1, Backend::kDense);
  CHECK_THROWS_AS(integrate_gauged_flow(fresh, h, fam, 1.0, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_gauged_flow(fresh, h, fam, 1.0, -0.1),
                  std::invalid_argument);

  const GaugeFamily off_diagonal = GaugeFamily::exp_generator(
      PauliSum::single(1, Complex(0.5, 0.0), PauliString("X")), 1.0);
  CHECK_THROWS_AS(integrate_gauged_flow(fresh, h, off_diagonal, 1.0, 1e-2),
                  StabilizerViolation);

  const DescriptorState sparse = DescriptorState::init(1, Backend::kPauliSum);
  CHECK_THROWS_AS(integrate_gauged_flow(sparse, h, fam, 1.0, 1e-2),
                  std::invalid_argument);
}

TEST_CASE("hamiltonian flow works on the pauli backend") {
  const HamiltonianSpec h = make_hamiltonian(PauliSum::from_terms(
      2, {{Complex(0.5, 0.0), PauliString("ZZ")},
          {Complex(0.25, 0.0), PauliString("XI")}}));
  const DescriptorState dense =
      evolve_hamiltonian(DescriptorState::init(2, Backend::kDense), h, 0.8);
  const DescriptorState sparse = evolve_hamiltonian(
      DescriptorState::init(2, Backend::kPauliSum), h, 0.8);
  for (const PauliString& obs : dhsim::testing::small_support_observables(2)) {
    CHECK(std::abs(expectation(dense, obs) - expectation(sparse, obs)) <
          1e-9);
  }
}

TEST_CASE("schrodinger oracle basics") {
  const std::vector<Complex> empty = schrodinger_oracle(Circuit{1, {}});
  CHECK(std::abs(empty[0] - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(empty[1]) < 1e-15);

  const std::vector<Complex> plus =
      schrodinger_oracle(Circuit{1, {Gate::single(GateKind::kH, 0)}});
  CHECK(std::abs(plus[0] - Complex(M_SQRT1_2, 0.0)) < 1e-12);
  CHECK(std::abs(plus[1] - Complex(M_SQRT1_2, 0.0)) < 1e-12);

  const std::vector<Complex> bell = schrodinger_oracle(bell_circuit());
  CHECK(std::abs(bell[0] - Complex(M_SQRT1_2, 0.0)) < 1e-12);
  CHECK(std::abs(bell[1]) < 1e-15);
  CHECK(std::abs(bell[2]) < 1e-15);
  CHECK(std::abs(bell[3] - Complex(M_SQRT1_2, 0.0)) < 1e-12);

  double norm = 0.0;
  for (const Complex& z : bell) norm += std::norm(z);
  CHECK(std::abs(norm - 1.0) < 1e-12);

  Limits tight;
  tight.dense_cap = 1;
  CHECK_THROWS_AS(schrodinger_oracle(Circuit{2, {}}, tight), CapExceeded);
}

TEST_CASE("pauli backend term cap overflows loudly") {
  Limits tiny;
  tiny.term_cap = 2;
  DescriptorState state = DescriptorState::init(1, Backend::kPauliSum, tiny);
  state = apply_gate(state, Gate::single(GateKind::kT, 0));
  // A second non-Clifford rotation pushes a descriptor past two terms.
  CHECK_THROWS_AS(
      run_circuit(state, Circuit{1,
                                 {Gate::single(GateKind::kH, 0),
                                  Gate::single(GateKind::kT, 0),
                                  Gate::single(GateKind::kH, 0)}}),
      CapExceeded);
}
