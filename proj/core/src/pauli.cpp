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

#include "dhsim/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dhsim/errors.hpp"
#include "dhsim/tensor.hpp"

namespace dhsim {

char letter_to_char(PauliLetter a) {
  switch (a) {
    case PauliLetter::I: return 'I';
    case PauliLetter::X: return 'X';
    case PauliLetter::Y: return 'Y';
    case PauliLetter::Z: return 'Z';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I': return PauliLetter::I;
    case 'X': return PauliLetter::X;
    case 'Y': return PauliLetter::Y;
    case 'Z': return PauliLetter::Z;
    default:
      throw ParseError(std::string("invalid Pauli letter '") + c + "'");
  }
}

std::pair<PauliLetter, Complex> multiply_letters(PauliLetter a, PauliLetter b) {
  using L = PauliLetter;
  if (a == L::I) return {b, Complex(1.0, 0.0)};
  if (b == L::I) return {a, Complex(1.0, 0.0)};
  if (a == b) return {L::I, Complex(1.0, 0.0)};
  // sigma_a sigma_b = i eps_abc sigma_c for distinct non-identity letters.
  static constexpr Complex plus_i(0.0, 1.0);
  static constexpr Complex minus_i(0.0, -1.0);
  switch (static_cast<int>(a) * 4 + static_cast<int>(b)) {
    case 4 * 1 + 2: return {L::Z, plus_i};   // XY = iZ
    case 4 * 2 + 1: return {L::Z, minus_i};  // YX = -iZ
    case 4 * 2 + 3: return {L::X, plus_i};   // YZ = iX
    case 4 * 3 + 2: return {L::X, minus_i};  // ZY = -iX
    case 4 * 3 + 1: return {L::Y, plus_i};   // ZX = iY
    case 4 * 1 + 3: return {L::Y, minus_i};  // XZ = -iY
  }
  throw std::logic_error("multiply_letters: unreachable");
}

PauliString::PauliString(const std::string& text) {
  letters_.reserve(text.size());
  for (char c : text) {
    letters_.push_back(letter_from_char(c));
  }
}

PauliString PauliString::single(int n, int site, PauliLetter a) {
  if (site < 0 || site >= n) {
    throw std::out_of_range("PauliString::single: site out of range");
  }
  PauliString s(n);
  s.set_letter(site, a);
  return s;
}

bool PauliString::is_identity() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](PauliLetter a) { return a == PauliLetter::I; });
}

std::vector<int> PauliString::support() const {
  std::vector<int> out;
  for (int q = 0; q < size(); ++q) {
    if (letters_[q] != PauliLetter::I) out.push_back(q);
  }
  return out;
}

std::string PauliString::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (PauliLetter a : letters_) {
    s.push_back(letter_to_char(a));
  }
  return s;
}

PauliTerm multiply_strings(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("multiply_strings: length mismatch");
  }
  PauliString out(a.size());
  Complex phase(1.0, 0.0);
  for (int q = 0; q < a.size(); ++q) {
    auto [letter, p] = multiply_letters(a.letter(q), b.letter(q));
    out.set_letter(q, letter);
    phase *= p;
  }
  return {phase, out};
}

PauliSum PauliSum::from_terms(int n, std::vector<PauliTerm> terms) {
  for (const PauliTerm& t : terms) {
    if (t.string.size() != n) {
      throw std::invalid_argument(
          "PauliSum: term length does not match qubit count");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const PauliTerm& a, const PauliTerm& b) {
              return a.string < b.string;
            });
  PauliSum out(n);
  for (const PauliTerm& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().string == t.string) {
      out.terms_.back().coeff += t.coeff;
    } else {
      out.terms_.push_back(t);
    }
  }
  out.terms_.erase(
      std::remove_if(out.terms_.begin(), out.terms_.end(),
                     [](const PauliTerm& t) {
                       return std::abs(t.coeff) < kCoeffDropTol;
                     }),
      out.terms_.end());
  return out;
}

PauliSum PauliSum::single(int n, Complex coeff, const PauliString& s) {
  return from_terms(n, {{coeff, s}});
}

PauliSum PauliSum::operator+(const PauliSum& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("PauliSum addition: qubit count mismatch");
  }
  std::vector<PauliTerm> terms = terms_;
  terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(n_, std::move(terms));
}

PauliSum PauliSum::operator-(const PauliSum& other) const {
  return *this + other * Complex(-1.0, 0.0);
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("PauliSum product: qubit count mismatch");
  }
  std::vector<PauliTerm> terms;
  terms.reserve(terms_.size() * other.terms_.size());
  for (const PauliTerm& a : terms_) {
    for (const PauliTerm& b : other.terms_) {
      PauliTerm prod = multiply_strings(a.string, b.string);
      prod.coeff *= a.coeff * b.coeff;
      terms.push_back(std::move(prod));
    }
  }
  return from_terms(n_, std::move(terms));
}

PauliSum PauliSum::operator*(const Complex& scalar) const {
  std::vector<PauliTerm> terms = terms_;
  for (PauliTerm& t : terms) {
    t.coeff *= scalar;
  }
  return from_terms(n_, std::move(terms));
}

bool PauliSum::operator==(const PauliSum& other) const {
  if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].string == other.terms_[i].string) ||
        terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const PauliTerm& t) {
    return std::abs(t.coeff.imag()) <= tol;
  });
}

double coeff_distance(const PauliSum& a, const PauliSum& b) {
  const PauliSum diff = a - b;
  double m = 0.0;
  for (const PauliTerm& t : diff.terms()) {
    m = std::max(m, std::abs(t.coeff));
  }
  return m;
}

std::pair<std::size_t, Complex> pauli_action(const PauliString& p,
                                             std::size_t j) {
  const int n = p.size();
  std::size_t k = j;
  Complex phase(1.0, 0.0);
  for (int q = 0; q < n; ++q) {
    const std::size_t mask = std::size_t(1) << (n - 1 - q);
    const bool bit = (j & mask) != 0;
    switch (p.letter(q)) {
      case PauliLetter::I:
        break;
      case PauliLetter::X:
        k ^= mask;
        break;
      case PauliLetter::Y:
        k ^= mask;
        phase *= bit ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
        break;
      case PauliLetter::Z:
        if (bit) phase = -phase;
        break;
    }
  }
  return {k, phase};
}

double vacuum_expectation(const PauliString& p) {
  for (int q = 0; q < p.size(); ++q) {
    const PauliLetter a = p.letter(q);
    if (a == PauliLetter::X || a == PauliLetter::Y) return 0.0;
  }
  return 1.0;
}

Complex vacuum_expectation(const PauliSum& s) {
  Complex acc(0.0, 0.0);
  for (const PauliTerm& t : s.terms()) {
    acc += t.coeff * vacuum_expectation(t.string);
  }
  return acc;
}

ComplexMatrix pauli_matrix(PauliLetter a) {
  switch (a) {
    case PauliLetter::I: return ComplexMatrix::identity(2);
    case PauliLetter::X: return sigma_x();
    case PauliLetter::Y: return sigma_y();
    case PauliLetter::Z: return sigma_z();
  }
  throw std::logic_error("pauli_matrix: unreachable");
}

ComplexMatrix pauli_string_matrix(const PauliString& p) {
  const std::size_t dim = std::size_t(1) << p.size();
  ComplexMatrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    auto [k, phase] = pauli_action(p, j);
    out(k, j) = phase;
  }
  return out;
}

ComplexMatrix pauli_sum_matrix(const PauliSum& s) {
  const std::size_t dim = std::size_t(1) << s.num_qubits();
  ComplexMatrix out(dim, dim);
  for (const PauliTerm& t : s.terms()) {
    for (std::size_t j = 0; j < dim; ++j) {
      auto [k, phase] = pauli_action(t.string, j);
      out(k, j) += t.coeff * phase;
    }
  }
  return out;
}

PauliString pauli_string_from_ordinal(std::size_t ordinal, int n) {
  PauliString s(n);
  for (int q = 0; q < n; ++q) {
    const std::size_t digit = (ordinal >> (2 * (n - 1 - q))) & 3u;
    s.set_letter(q, static_cast<PauliLetter>(digit));
  }
  return s;
}

PauliSum pauli_decompose(const ComplexMatrix& m, int n) {
  const std::size_t dim = std::size_t(1) << n;
  if (m.rows() != dim || m.cols() != dim) {
    throw std::invalid_argument("pauli_decompose: operator is not 2^n x 2^n");
  }
  std::vector<PauliTerm> terms;
  const std::size_t total = std::size_t(1) << (2 * n);
  for (std::size_t ordinal = 0; ordinal < total; ++ordinal) {
    const PauliString p = pauli_string_from_ordinal(ordinal, n);
    // tr(P m) via the permutation action of P; P is Hermitian.
    Complex tr(0.0, 0.0);
    for (std::size_t j = 0; j < dim; ++j) {
      auto [k, phase] = pauli_action(p, j);
      tr += phase * m(j, k);
    }
    const Complex coeff = tr / double(dim);
    if (std::abs(coeff) >= kCoeffDropTol) {
      terms.push_back({coeff, p});
    }
  }
  return PauliSum::from_terms(n, std::move(terms));
}

}  // namespace dhsim
