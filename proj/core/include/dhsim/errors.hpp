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

#ifndef DHSIM_ERRORS_HPP
#define DHSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dhsim {

/// Malformed or version-incompatible input (JSON files, string formats).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured resource cap was exceeded (dense qubit cap, Pauli-sum
/// term cap, decomposition cap).
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

/// A gauge transform or gauge family failed the reference-vector
/// stabilizer condition.
struct StabilizerViolation : std::runtime_error {
  explicit StabilizerViolation(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace dhsim

#endif  // DHSIM_ERRORS_HPP
