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

#include "dhsim/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace dhsim {

namespace {

std::size_t pow2(int n) { return std::size_t(1) << n; }

// Max absolute column sum; cheap overestimate used to pick the scaling
// power in mat_exp.
double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      sum += std::abs(a(r, c));
    }
    best = std::max(best, sum);
  }
  return best;
}

}  // namespace

ComplexMatrix sigma_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

ComplexMatrix sigma_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(0.0, -1.0);
  m(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix sigma_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

std::vector<Complex> basis_vector(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::out_of_range("basis_vector: index out of range");
  }
  std::vector<Complex> v(dim, Complex(0.0, 0.0));
  v[index] = 1.0;
  return v;
}

std::vector<Complex> reference_vector(int n) {
  return basis_vector(pow2(n), 0);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Complex av = a(ar, ac);
      if (av == Complex(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = av * b(br, bc);
        }
      }
    }
  }
  return out;
}

ComplexMatrix embed_single_site(const ComplexMatrix& op, int site, int n) {
  if (op.rows() != 2 || op.cols() != 2) {
    throw std::invalid_argument("embed_single_site: operator must be 2x2");
  }
  if (site < 0 || site >= n) {
    throw std::out_of_range("embed_single_site: site " + std::to_string(site) +
                            " out of range for " + std::to_string(n) +
                            " qubits");
  }
  return embed_gate(op, {site}, n);
}

ComplexMatrix embed_gate(const ComplexMatrix& gate,
                         const std::vector<int>& targets, int n) {
  const int k = static_cast<int>(targets.size());
  const std::size_t local_dim = pow2(k);
  if (gate.rows() != local_dim || gate.cols() != local_dim) {
    throw std::invalid_argument(
        "embed_gate: matrix dimension does not match target count");
  }
  for (int t : targets) {
    if (t < 0 || t >= n) {
      throw std::out_of_range("embed_gate: target out of range");
    }
  }
  const std::size_t dim = pow2(n);
  ComplexMatrix out(dim, dim);
  // Shift of qubit q inside a full index (qubit 0 is the MSB).
  auto qshift = [&](int q) { return n - 1 - q; };
  for (std::size_t full = 0; full < dim; ++full) {
    std::size_t local = 0;
    std::size_t rest = full;
    for (int p = 0; p < k; ++p) {
      const std::size_t bit = (full >> qshift(targets[p])) & 1u;
      local |= bit << (k - 1 - p);
      rest &= ~(std::size_t(1) << qshift(targets[p]));
    }
    for (std::size_t jloc = 0; jloc < local_dim; ++jloc) {
      std::size_t col = rest;
      for (int p = 0; p < k; ++p) {
        const std::size_t bit = (jloc >> (k - 1 - p)) & 1u;
        col |= bit << qshift(targets[p]);
      }
      const Complex v = gate(local, jloc);
      if (v != Complex(0.0, 0.0)) {
        out(full, col) = v;
      }
    }
  }
  return out;
}

ComplexMatrix mat_exp(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw std::invalid_argument("mat_exp: matrix is not square");
  }
  const double norm = one_norm(a);
  int squarings = 0;
  if (norm > 0.25) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  }
  const Complex scale(std::ldexp(1.0, -squarings), 0.0);
  const ComplexMatrix scaled = a * scale;

  ComplexMatrix sum = ComplexMatrix::identity(a.rows());
  ComplexMatrix term = ComplexMatrix::identity(a.rows());
  for (int k = 1; k <= 40; ++k) {
    term = term * scaled;
    term = term * Complex(1.0 / k, 0.0);
    sum += term;
    if (term.max_norm() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) {
    sum = sum * sum;
  }
  return sum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::set<int>& keep,
                            int n) {
  const std::size_t dim = pow2(n);
  if (rho.rows() != dim || rho.cols() != dim) {
    throw std::invalid_argument("partial_trace: operator is not 2^n x 2^n");
  }
  for (int q : keep) {
    if (q < 0 || q >= n) {
      throw std::out_of_range("partial_trace: kept qubit out of range");
    }
  }
  if (keep.empty()) {
    ComplexMatrix out(1, 1);
    out(0, 0) = rho.trace();
    return out;
  }
  std::vector<int> kept(keep.begin(), keep.end());
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!keep.count(q)) traced.push_back(q);
  }
  const int m = static_cast<int>(kept.size());
  const int r = static_cast<int>(traced.size());
  auto qshift = [&](int q) { return n - 1 - q; };
  auto merge = [&](std::size_t a, std::size_t t) {
    std::size_t full = 0;
    for (int i = 0; i < m; ++i) {
      full |= ((a >> (m - 1 - i)) & 1u) << qshift(kept[i]);
    }
    for (int i = 0; i < r; ++i) {
      full |= ((t >> (r - 1 - i)) & 1u) << qshift(traced[i]);
    }
    return full;
  };
  ComplexMatrix out(pow2(m), pow2(m));
  for (std::size_t a = 0; a < pow2(m); ++a) {
    for (std::size_t b = 0; b < pow2(m); ++b) {
      Complex acc(0.0, 0.0);
      for (std::size_t t = 0; t < pow2(r); ++t) {
        acc += rho(merge(a, t), merge(b, t));
      }
      out(a, b) = acc;
    }
  }
  return out;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  const ComplexMatrix prod = m.adjoint() * m;
  return max_norm_diff(prod, ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix conjugate_by(const ComplexMatrix& u, const ComplexMatrix& x) {
  return u.adjoint() * (x * u);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
  }
  const std::size_t n = m.rows();
  ComplexMatrix a = m;

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        s += std::norm(a(p, q));
      }
    }
    return std::sqrt(s);
  };

  const double scale = std::max(a.max_norm(), 1e-300);
  for (int sweep = 0; sweep < 60 && off_norm() > 1e-14 * scale * double(n);
       ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex beta = a(p, q);
        if (std::abs(beta) < 1e-300) continue;
        const double alpha = a(p, p).real();
        const double gamma = a(q, q).real();
        const double phi = std::arg(beta);
        const double theta = 0.5 * std::atan2(2.0 * std::abs(beta),
                                              alpha - gamma);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const Complex eip = std::polar(1.0, phi);
        const Complex eim = std::polar(1.0, -phi);
        // Columns p, q of A <- A J.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + s * eim * akq;
          a(k, q) = -s * eip * akp + c * akq;
        }
        // Rows p, q of A <- J^dagger A.
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + s * eip * aqk;
          a(q, k) = -s * eim * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) {
    eig[i] = a(i, i).real();
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

Complex inner_product(const std::vector<Complex>& a,
                      const std::vector<Complex>& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: dimension mismatch");
  }
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

}  // namespace dhsim
