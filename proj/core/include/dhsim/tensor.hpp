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
// Tensor-product linear algebra on qubit registers. The ordering
// convention is global to the project: qubit 0 is the leftmost (most
// significant) tensor factor, so basis index bits read left to right as
// qubit 0, 1, ..., n-1.

#ifndef DHSIM_TENSOR_HPP
#define DHSIM_TENSOR_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "dhsim/complex_matrix.hpp"

namespace dhsim {

inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

/// Standard basis column vector e_index of the given dimension.
std::vector<Complex> basis_vector(std::size_t dim, std::size_t index);

/// The fixed reference vector |0...0> on n qubits.
std::vector<Complex> reference_vector(int n);

/// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// I (x) ... (x) op (x) ... (x) I with `op` (2x2) at tensor slot `site`
/// of an n-qubit register. Throws std::out_of_range for a bad site.
ComplexMatrix embed_single_site(const ComplexMatrix& op, int site, int n);

/// Embeds a 2^k x 2^k gate matrix acting on the ordered target qubits
/// into the full 2^n space. The gate's own slot 0 corresponds to
/// targets[0] (its most significant local bit).
ComplexMatrix embed_gate(const ComplexMatrix& gate,
                         const std::vector<int>& targets, int n);

/// Matrix exponential by scaling and squaring with a truncated series.
/// Accurate to ~1e-12 in max-norm for the operator sizes used here.
ComplexMatrix mat_exp(const ComplexMatrix& a);

/// Partial trace of a 2^n x 2^n operator onto the qubits in `keep`
/// (ascending order). An empty keep-set yields the 1x1 matrix [tr rho].
ComplexMatrix partial_trace(const ComplexMatrix& rho,
                            const std::set<int>& keep, int n);

bool is_hermitian(const ComplexMatrix& m, double tol = kHermitianTol);
bool is_unitary(const ComplexMatrix& m, double tol = kUnitaryTol);

/// U^dagger X U.
ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& x);

/// Ascending eigenvalues of a Hermitian matrix (cyclic Jacobi). Used for
/// positive-semidefiniteness checks on small density operators.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

Complex inner_product(const std::vector<Complex>& a,
                      const std::vector<Complex>& b);

}  // namespace dhsim

#endif  // DHSIM_TENSOR_HPP
