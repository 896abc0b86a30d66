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

#include "dhsim/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dhsim {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = Complex(1.0, 0.0);
  }
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

const Complex& ComplexMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw std::out_of_range("ComplexMatrix::at: index (" + std::to_string(r) +
                            ", " + std::to_string(c) + ") out of bounds for " +
                            std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " matrix");
  }
  return data_[r * cols_ + c];
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (!same_shape(other)) {
    throw std::invalid_argument("matrix addition: shape mismatch");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] + other.data_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (!same_shape(other)) {
    throw std::invalid_argument("matrix subtraction: shape mismatch");
  }
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] - other.data_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw std::invalid_argument("matrix product: inner dimension mismatch");
  }
  ComplexMatrix out(rows_, other.cols_);
  const std::size_t n = rows_, k = cols_, m = other.cols_;
  // i-k-j order keeps both operands streaming row-major.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex* arow = &data_[i * k];
    Complex* crow = &out.data_[i * m];
    for (std::size_t p = 0; p < k; ++p) {
      const Complex a = arow[p];
      if (a == Complex(0.0, 0.0)) continue;
      const Complex* brow = &other.data_[p * m];
      for (std::size_t j = 0; j < m; ++j) {
        crow[j] += a * brow[j];
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const Complex& scalar) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = data_[i] * scalar;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (!same_shape(other)) {
    throw std::invalid_argument("matrix addition: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += other.data_[i];
  }
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj(data_[r * cols_ + c]);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = data_[r * cols_ + c];
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) {
    out.data_[i] = std::conj(data_[i]);
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) {
    throw std::invalid_argument("trace: matrix is not square");
  }
  Complex t(0.0, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    t += data_[i * cols_ + i];
  }
  return t;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const Complex& z : data_) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  }
  std::vector<Complex> out(rows_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < rows_; ++r) {
    const Complex* row = &data_[r * cols_];
    Complex acc(0.0, 0.0);
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += row[c] * v[c];
    }
    out[r] = acc;
  }
  return out;
}

double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("max_norm_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

}  // namespace dhsim
