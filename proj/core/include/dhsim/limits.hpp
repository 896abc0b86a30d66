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

#ifndef DHSIM_LIMITS_HPP
#define DHSIM_LIMITS_HPP

#include <cstddef>

namespace dhsim {

/// Resource caps carried by a descriptor state. All are soft limits that
/// guard memory/time blowups; exceeding one raises CapExceeded.
struct Limits {
  /// Max qubit count for the dense backend (2^n x 2^n matrices).
  int dense_cap = 10;
  /// Max qubit count for dense <-> Pauli-sum decompositions (4^n strings).
  int decomp_cap = 8;
  /// Max number of terms a single Pauli-sum descriptor may hold.
  std::size_t term_cap = 4096;
  /// Max subset size for density-operator reconstruction (4^|S| strings).
  int reconstruction_cap = 6;
};

}  // namespace dhsim

#endif  // DHSIM_LIMITS_HPP
