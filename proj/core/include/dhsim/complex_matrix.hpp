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

#ifndef DHSIM_COMPLEX_MATRIX_HPP
#define DHSIM_COMPLEX_MATRIX_HPP

#include <cassert>
#include <complex>
#include <cstddef>
#include <vector>

namespace dhsim {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage. Values are immutable in
/// practice: every operation returns a new matrix; in-place mutation is
/// only used while a value is being assembled.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    assert(data_.size() == rows_ * cols_);
  }

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    assert(r < rows_ && c < cols_);
    return data_[r * cols_ + c];
  }

  /// Bounds-checked access; throws std::out_of_range.
  const Complex& at(std::size_t r, std::size_t c) const;

  const std::vector<Complex>& data() const { return data_; }
  std::vector<Complex>& data() { return data_; }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const Complex& scalar) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  Complex trace() const;

  /// Largest entrywise absolute value.
  double max_norm() const;

  /// Matrix-vector product.
  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  bool same_shape(const ComplexMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

inline ComplexMatrix operator*(const Complex& scalar, const ComplexMatrix& m) {
  return m * scalar;
}

/// max |a_ij - b_ij|; shapes must match.
double max_norm_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace dhsim

#endif  // DHSIM_COMPLEX_MATRIX_HPP
