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
// Pauli strings and complex-weighted Pauli sums. These carry observables,
// Hamiltonians, gauge generators, and the sparse descriptor backend.

#ifndef DHSIM_PAULI_HPP
#define DHSIM_PAULI_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dhsim/complex_matrix.hpp"

namespace dhsim {

/// Coefficients below this magnitude are dropped during normalization.
inline constexpr double kCoeffDropTol = 1e-14;
/// A Pauli sum counts as Hermitian when every coefficient is real to
/// within this tolerance.
inline constexpr double kPauliHermitianTol = 1e-12;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_to_char(PauliLetter a);
PauliLetter letter_from_char(char c);

/// Product of two single-qubit Paulis: sigma_a sigma_b = phase * sigma_c.
std::pair<PauliLetter, Complex> multiply_letters(PauliLetter a, PauliLetter b);

/// One letter per qubit; length always equals the register size.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int n) : letters_(n, PauliLetter::I) {}
  explicit PauliString(const std::string& text);

  static PauliString single(int n, int site, PauliLetter a);

  int size() const { return static_cast<int>(letters_.size()); }
  PauliLetter letter(int q) const { return letters_[q]; }
  void set_letter(int q, PauliLetter a) { letters_[q] = a; }

  bool is_identity() const;
  /// Qubits carrying a non-identity letter, ascending.
  std::vector<int> support() const;

  std::string str() const;

  bool operator==(const PauliString& o) const { return letters_ == o.letters_; }
  bool operator<(const PauliString& o) const { return letters_ < o.letters_; }

 private:
  std::vector<PauliLetter> letters_;
};

struct PauliTerm {
  Complex coeff;
  PauliString string;
};

/// Product of two strings of equal length, tracking the accumulated phase.
PauliTerm multiply_strings(const PauliString& a, const PauliString& b);

/// Normalized linear combination of Pauli strings: terms sorted by string,
/// duplicates merged, near-zero coefficients dropped.
class PauliSum {
 public:
  PauliSum() = default;
  /// The zero operator on n qubits.
  explicit PauliSum(int n) : n_(n) {}

  static PauliSum from_terms(int n, std::vector<PauliTerm> terms);
  static PauliSum single(int n, Complex coeff, const PauliString& s);

  int num_qubits() const { return n_; }
  const std::vector<PauliTerm>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  PauliSum operator+(const PauliSum& other) const;
  PauliSum operator-(const PauliSum& other) const;
  PauliSum operator*(const PauliSum& other) const;
  PauliSum operator*(const Complex& scalar) const;

  bool operator==(const PauliSum& other) const;

  /// All coefficients real within tol.
  bool is_hermitian(double tol = kPauliHermitianTol) const;

 private:
  int n_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Largest coefficient magnitude of (a - b); a Pauli-basis max-norm.
double coeff_distance(const PauliSum& a, const PauliSum& b);

/// P |j> = phase |k>; returns (k, phase).
std::pair<std::size_t, Complex> pauli_action(const PauliString& p,
                                             std::size_t j);

/// <0...0| P |0...0>: 1 when every letter is I or Z, else 0.
double vacuum_expectation(const PauliString& p);
Complex vacuum_expectation(const PauliSum& s);

ComplexMatrix pauli_matrix(PauliLetter a);
ComplexMatrix pauli_string_matrix(const PauliString& p);
ComplexMatrix pauli_sum_matrix(const PauliSum& s);

/// Expansion of an arbitrary 2^n x 2^n operator in the Pauli-string basis;
/// coefficients are tr(P m) / 2^n. Cost grows as 8^n.
PauliSum pauli_decompose(const ComplexMatrix& m, int n);

/// Enumerates all 4^n strings on n qubits in lexicographic order
/// (I < X < Y < Z, qubit 0 most significant).
PauliString pauli_string_from_ordinal(std::size_t ordinal, int n);

}  // namespace dhsim

#endif  // DHSIM_PAULI_HPP
