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

#include "dhsim/gauge.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "dhsim/errors.hpp"
#include "dhsim/tensor.hpp"

namespace dhsim {

namespace {

std::size_t pow2(int n) { return std::size_t(1) << n; }

double wrap_phase(double theta) {
  const double two_pi = 2.0 * M_PI;
  double out = std::fmod(theta, two_pi);
  if (out < 0.0) out += two_pi;
  return out;
}

double uniform_unit(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller; draws two uniforms per normal to stay seed-stable.
double standard_normal(std::mt19937_64& rng) {
  double u1 = uniform_unit(rng);
  const double u2 = uniform_unit(rng);
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

}  // namespace

GaugeTransform GaugeTransform::identity(int n) {
  return GaugeTransform{ComplexMatrix::identity(pow2(n)), 0.0};
}

void validate_gauge(const GaugeTransform& g, double tol) {
  if (!g.v.is_square() || g.v.rows() == 0) {
    throw std::invalid_argument("gauge transform matrix must be square");
  }
  if (!is_unitary(g.v, std::max(tol, kUnitaryTol))) {
    throw std::invalid_argument("gauge transform matrix is not unitary");
  }
  const Complex expected = std::polar(1.0, -g.theta);
  for (std::size_t r = 0; r < g.v.rows(); ++r) {
    const Complex want = (r == 0) ? expected : Complex(0.0, 0.0);
    if (std::abs(g.v(r, 0) - want) > tol) {
      throw StabilizerViolation(
          "gauge transform does not stabilize the reference vector "
          "(component " +
          std::to_string(r) + ")");
    }
  }
}

GaugeFamily GaugeFamily::constant_family(GaugeTransform g) {
  GaugeFamily fam;
  fam.kind = Kind::kConstant;
  fam.constant = std::move(g);
  return fam;
}

GaugeFamily GaugeFamily::exp_generator(PauliSum generator, double omega) {
  GaugeFamily fam;
  fam.kind = Kind::kExpGenerator;
  fam.generator = std::move(generator);
  fam.omega = omega;
  return fam;
}

void validate_family_structure(const GaugeFamily& fam) {
  if (fam.kind == GaugeFamily::Kind::kConstant) {
    validate_gauge(fam.constant);
    return;
  }
  if (fam.generator.num_qubits() < 1) {
    throw std::invalid_argument("gauge family generator is empty");
  }
  if (!fam.generator.is_hermitian()) {
    throw StabilizerViolation(
        "gauge family generator must have real coefficients");
  }
  for (const PauliTerm& term : fam.generator.terms()) {
    for (int q = 0; q < term.string.size(); ++q) {
      const PauliLetter letter = term.string.letter(q);
      if (letter != PauliLetter::I && letter != PauliLetter::Z) {
        throw StabilizerViolation(
            "gauge family generator must be diagonal (letters I/Z only), "
            "found " +
            term.string.str());
      }
    }
  }
  if (!std::isfinite(fam.omega)) {
    throw std::invalid_argument("gauge family rate must be finite");
  }
}

GaugeTransform gauge_family_value(const GaugeFamily& fam, double t) {
  if (fam.kind == GaugeFamily::Kind::kConstant) {
    return fam.constant;
  }
  const ComplexMatrix gen = pauli_sum_matrix(fam.generator);
  const ComplexMatrix v = mat_exp(gen * Complex(0.0, -fam.omega * t));
  // The reference vector is a +1 eigenvector of every I/Z string, so the
  // accumulated phase is omega * t * (sum of coefficients).
  double coeff_sum = 0.0;
  for (const PauliTerm& term : fam.generator.terms()) {
    coeff_sum += term.coeff.real();
  }
  return GaugeTransform{v, wrap_phase(fam.omega * t * coeff_sum)};
}

ComplexMatrix frame_velocity(const GaugeFamily& fam, double t) {
  (void)t;
  if (fam.kind == GaugeFamily::Kind::kConstant) {
    return ComplexMatrix::zero(fam.constant.v.rows(), fam.constant.v.cols());
  }
  // V(t) = exp(-i omega t G) gives V^dagger dV/dt = -i omega G.
  return pauli_sum_matrix(fam.generator) * Complex(0.0, -fam.omega);
}

GaugeTransform random_stabilizing_unitary(int n, std::uint64_t seed,
                                          Limits limits) {
  if (n < 1) {
    throw std::invalid_argument("random_stabilizing_unitary: need n >= 1");
  }
  if (n > limits.dense_cap) {
    throw CapExceeded("random_stabilizing_unitary: " + std::to_string(n) +
                      " qubits exceeds dense cap " +
                      std::to_string(limits.dense_cap));
  }
  std::mt19937_64 rng(seed);
  const double theta = 2.0 * M_PI * uniform_unit(rng);
  const std::size_t dim = pow2(n);
  const std::size_t block = dim - 1;

  // Haar-style block on the complement of the reference vector:
  // Gram-Schmidt on complex Gaussian columns, repeated once for
  // numerical orthogonality.
  std::vector<std::vector<Complex>> cols(block);
  for (std::size_t j = 0; j < block; ++j) {
    std::vector<Complex> v(block);
    double norm_sq = 0.0;
    do {
      for (std::size_t r = 0; r < block; ++r) {
        v[r] = Complex(standard_normal(rng), standard_normal(rng));
      }
      norm_sq = 0.0;
      for (const Complex& z : v) norm_sq += std::norm(z);
    } while (norm_sq < 1e-12);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        Complex overlap(0.0, 0.0);
        for (std::size_t r = 0; r < block; ++r) {
          overlap += std::conj(cols[i][r]) * v[r];
        }
        for (std::size_t r = 0; r < block; ++r) {
          v[r] -= overlap * cols[i][r];
        }
      }
    }
    double norm = 0.0;
    for (const Complex& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (Complex& z : v) z /= norm;
    cols[j] = std::move(v);
  }

  ComplexMatrix m(dim, dim);
  m(0, 0) = std::polar(1.0, -theta);
  for (std::size_t j = 0; j < block; ++j) {
    for (std::size_t r = 0; r < block; ++r) {
      m(r + 1, j + 1) = cols[j][r];
    }
  }
  return GaugeTransform{std::move(m), theta};
}

DescriptorState apply_gauge(const DescriptorState& state,
                            const GaugeTransform& g) {
  validate_gauge(g);
  const int n = state.num_qubits();
  if (g.v.rows() != pow2(n)) {
    throw std::invalid_argument(
        "apply_gauge: transform dimension does not match qubit count");
  }
  std::optional<ComplexMatrix> frame;
  if (state.has_tracked_unitary()) {
    frame = state.tracked_unitary() * g.v;
  }
  if (state.backend() == Backend::kDense) {
    std::vector<ComplexMatrix> dense;
    dense.reserve(state.dense_triples().size());
    for (const ComplexMatrix& x : state.dense_triples()) {
      dense.push_back(conjugate_by(g.v, x));
    }
    return DescriptorState(n, Backend::kDense, state.limits(),
                           std::move(dense), {}, std::move(frame));
  }
  if (n > state.limits().decomp_cap) {
    throw CapExceeded("apply_gauge: " + std::to_string(n) +
                      " qubits exceeds decomposition cap " +
                      std::to_string(state.limits().decomp_cap) +
                      " for the pauli backend");
  }
  std::vector<PauliSum> sums;
  sums.reserve(state.pauli_triples().size());
  for (const PauliSum& s : state.pauli_triples()) {
    PauliSum updated =
        pauli_decompose(conjugate_by(g.v, pauli_sum_matrix(s)), n);
    if (updated.term_count() > state.limits().term_cap) {
      throw CapExceeded("apply_gauge: descriptor needs " +
                        std::to_string(updated.term_count()) +
                        " terms, cap is " +
                        std::to_string(state.limits().term_cap));
    }
    sums.push_back(std::move(updated));
  }
  return DescriptorState(n, Backend::kPauliSum, state.limits(), {},
                         std::move(sums), std::move(frame));
}

ComplexMatrix canonical_form(const DescriptorState& state) {
  std::set<int> all;
  for (int q = 0; q < state.num_qubits(); ++q) all.insert(q);
  return reduced_density(state, all);
}

bool gauge_equivalent(const DescriptorState& a, const DescriptorState& b,
                      double tol) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("gauge_equivalent: qubit count mismatch");
  }
  return max_norm_diff(canonical_form(a), canonical_form(b)) < tol;
}

WitnessResult recover_witness(const DescriptorState& a,
                              const DescriptorState& b) {
  if (!a.has_tracked_unitary() || !b.has_tracked_unitary()) {
    return WitnessFailure{"untracked"};
  }
  if (!gauge_equivalent(a, b)) {
    return WitnessFailure{"inequivalent"};
  }
  const ComplexMatrix v = a.tracked_unitary().adjoint() * b.tracked_unitary();
  const double theta = wrap_phase(-std::arg(v(0, 0)));
  return GaugeTransform{v, theta};
}

}  // namespace dhsim
