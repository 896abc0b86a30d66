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

#include <random>

#include "dhsim/tensor.hpp"
#include "test_support.hpp"

using namespace dhsim;
using dhsim::testing::partial_trace_oracle;
using dhsim::testing::taylor_mat_exp;

namespace {

ComplexMatrix random_matrix(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto u = [&]() { return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0; };
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(r, c) = Complex(u(), u());
    }
  }
  return m;
}

ComplexMatrix random_anti_hermitian(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix a = random_matrix(dim, seed);
  return (a - a.adjoint()) * Complex(0.5, 0.0);
}

ComplexMatrix random_density(std::size_t dim, std::uint64_t seed) {
  const ComplexMatrix a = random_matrix(dim, seed);
  ComplexMatrix rho = a.adjoint() * a;
  return rho * (Complex(1.0, 0.0) / rho.trace());
}

}  // namespace

TEST_CASE("kron identity and Pauli cases") {
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  CHECK(max_norm_diff(kron(i2, i2), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zi = kron(sigma_z(), i2);
  ComplexMatrix expected(4, 4);
  expected(0, 0) = 1.0;
  expected(1, 1) = 1.0;
  expected(2, 2) = -1.0;
  expected(3, 3) = -1.0;
  CHECK(max_norm_diff(zi, expected) == 0.0);

  const ComplexMatrix xx = kron(sigma_x(), sigma_x());
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      CHECK(xx(r, c) == (r + c == 3 ? Complex(1.0, 0.0) : Complex(0.0, 0.0)));
    }
  }
}

TEST_CASE("kron is associative, exactly on Pauli entries") {
  const ComplexMatrix a = sigma_x(), b = sigma_y(), c = sigma_z();
  const ComplexMatrix left = kron(kron(a, b), c);
  const ComplexMatrix right = kron(a, kron(b, c));
  CHECK(left.data() == right.data());
}

TEST_CASE("embed_single_site") {
  CHECK(max_norm_diff(embed_single_site(sigma_z(), 0, 1), sigma_z()) == 0.0);
  CHECK(max_norm_diff(embed_single_site(sigma_z(), 0, 2),
                      kron(sigma_z(), ComplexMatrix::identity(2))) == 0.0);
  CHECK(max_norm_diff(embed_single_site(sigma_x(), 1, 2),
                      kron(ComplexMatrix::identity(2), sigma_x())) == 0.0);
  CHECK_THROWS_AS(embed_single_site(sigma_x(), 2, 2), std::out_of_range);
  CHECK_THROWS_AS(embed_single_site(sigma_x(), -1, 2), std::out_of_range);
}

TEST_CASE("embed_gate respects target order") {
  // Control on the less significant qubit: |01> (index 1) -> |11> (3).
  ComplexMatrix cnot(4, 4);
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;
  const ComplexMatrix reversed = embed_gate(cnot, {1, 0}, 2);
  CHECK(reversed(3, 1) == Complex(1.0, 0.0));
  CHECK(reversed(1, 3) == Complex(1.0, 0.0));
  CHECK(reversed(0, 0) == Complex(1.0, 0.0));
  CHECK(reversed(2, 2) == Complex(1.0, 0.0));

  // Straight order reproduces the raw matrix.
  CHECK(max_norm_diff(embed_gate(cnot, {0, 1}, 2), cnot) == 0.0);
}

TEST_CASE("mat_exp basics") {
  CHECK(max_norm_diff(mat_exp(ComplexMatrix::zero(3, 3)),
                      ComplexMatrix::identity(3)) == 0.0);

  // exp(-i (pi/2) sx) = -i sx.
  const ComplexMatrix arg = sigma_x() * Complex(0.0, -M_PI / 2.0);
  ComplexMatrix expected(2, 2);
  expected(0, 1) = Complex(0.0, -1.0);
  expected(1, 0) = Complex(0.0, -1.0);
  CHECK(max_norm_diff(mat_exp(arg), expected) < 1e-12);
  CHECK(max_norm_diff(mat_exp(arg), taylor_mat_exp(arg)) < 1e-12);

  // exp(-i theta sz) = diag(e^{-i theta}, e^{i theta}) at theta = 0.3.
  const double theta = 0.3;
  const ComplexMatrix zr = mat_exp(sigma_z() * Complex(0.0, -theta));
  ComplexMatrix zd(2, 2);
  zd(0, 0) = std::polar(1.0, -theta);
  zd(1, 1) = std::polar(1.0, theta);
  CHECK(max_norm_diff(zr, zd) < 1e-12);
  CHECK(max_norm_diff(zr, taylor_mat_exp(sigma_z() * Complex(0.0, -theta))) <
        1e-12);

  CHECK_THROWS_AS(mat_exp(ComplexMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("mat_exp of anti-Hermitian arguments is unitary and invertible") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    for (std::size_t dim : {2, 4, 8, 16}) {
      const ComplexMatrix a = random_anti_hermitian(dim, seed * 100 + dim);
      const ComplexMatrix e = mat_exp(a);
      CHECK(is_unitary(e, 1e-10));
      CHECK(max_norm_diff(e * mat_exp(a * Complex(-1.0, 0.0)),
                          ComplexMatrix::identity(dim)) < 1e-10);
      CHECK(max_norm_diff(e, taylor_mat_exp(a, 40)) < 1e-12);
    }
  }
}

TEST_CASE("partial_trace product and entangled cases") {
  // |00><00| restricted to qubit 0.
  ComplexMatrix rho00(4, 4);
  rho00(0, 0) = 1.0;
  ComplexMatrix ket0(2, 2);
  ket0(0, 0) = 1.0;
  CHECK(max_norm_diff(partial_trace(rho00, {0}, 2), ket0) == 0.0);

  // Bell pair: each side is maximally mixed.
  std::vector<Complex> bell(4, Complex(0.0, 0.0));
  bell[0] = Complex(M_SQRT1_2, 0.0);
  bell[3] = Complex(M_SQRT1_2, 0.0);
  const ComplexMatrix rho_bell = dhsim::testing::outer_product(bell);
  const ComplexMatrix half = ComplexMatrix::identity(2) * Complex(0.5, 0.0);
  CHECK(max_norm_diff(partial_trace(rho_bell, {0}, 2), half) < 1e-15);
  CHECK(max_norm_diff(partial_trace(rho_bell, {0}, 2),
                      partial_trace_oracle(rho_bell, {0}, 2)) == 0.0);

  // Keep-all is the identity map; empty keep-set is the trace.
  CHECK(max_norm_diff(partial_trace(rho_bell, {0, 1}, 2), rho_bell) == 0.0);
  const ComplexMatrix traced = partial_trace(rho_bell, {}, 2);
  CHECK(traced.rows() == 1);
  CHECK(std::abs(traced(0, 0) - Complex(1.0, 0.0)) < 1e-15);

  CHECK_THROWS_AS(partial_trace(ComplexMatrix(3, 3), {0}, 2),
                  std::invalid_argument);
}

TEST_CASE("partial_trace preserves trace and positivity") {
  for (std::uint64_t seed = 3; seed <= 8; ++seed) {
    const ComplexMatrix rho = random_density(8, seed);
    for (const std::set<int>& keep :
         {std::set<int>{0}, std::set<int>{1, 2}, std::set<int>{0, 2}}) {
      const ComplexMatrix reduced = partial_trace(rho, keep, 3);
      CHECK(std::abs(reduced.trace() - Complex(1.0, 0.0)) < 1e-12);
      CHECK(is_hermitian(reduced, 1e-12));
      const std::vector<double> eig = hermitian_eigenvalues(reduced);
      CHECK(eig.front() >= -1e-10);
      CHECK(max_norm_diff(reduced, partial_trace_oracle(rho, keep, 3)) <
            1e-14);
    }
  }
}

TEST_CASE("structural predicates") {
  CHECK(is_hermitian(sigma_y()));
  CHECK(is_unitary(sigma_y()));
  ComplexMatrix bad = sigma_y();
  bad(0, 1) += Complex(1e-6, 0.0);
  CHECK_FALSE(is_hermitian(bad));
  CHECK(is_hermitian(bad, 1e-3));
  const ComplexMatrix stretched = sigma_y() * Complex(1.0 + 1e-6, 0.0);
  CHECK_FALSE(is_unitary(stretched));
  CHECK(is_unitary(stretched, 1e-3));
}

TEST_CASE("hermitian_eigenvalues") {
  const std::vector<double> ez = hermitian_eigenvalues(sigma_z());
  CHECK(ez[0] == doctest::Approx(-1.0));
  CHECK(ez[1] == doctest::Approx(1.0));
  const std::vector<double> ex = hermitian_eigenvalues(sigma_x());
  CHECK(ex[0] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(ex[1] == doctest::Approx(1.0).epsilon(1e-10));

  for (std::uint64_t seed = 11; seed <= 14; ++seed) {
    const ComplexMatrix a = random_matrix(6, seed);
    const ComplexMatrix h = (a + a.adjoint()) * Complex(0.5, 0.0);
    const std::vector<double> eig = hermitian_eigenvalues(h);
    double sum = 0.0, sum_sq = 0.0;
    for (double e : eig) {
      sum += e;
      sum_sq += e * e;
    }
    CHECK(sum == doctest::Approx(h.trace().real()).epsilon(1e-9));
    CHECK(sum_sq == doctest::Approx((h * h).trace().real()).epsilon(1e-9));
  }
}

TEST_CASE("bounds-checked access") {
  const ComplexMatrix m(2, 2);
  CHECK_THROWS_AS(m.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(m.at(0, 2), std::out_of_range);
  CHECK(m.at(1, 1) == Complex(0.0, 0.0));
}
