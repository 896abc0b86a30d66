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
// Quantum gauge transformations: unitaries that stabilize the reference
// vector up to a phase. Conjugating every descriptor by such a unitary
// changes no expectation value, which makes descriptor assignments that
// differ this way physically indistinguishable. The canonical,
// gauge-invariant representative of a state is its reconstructed density
// operator.

#ifndef DHSIM_GAUGE_HPP
#define DHSIM_GAUGE_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "dhsim/complex_matrix.hpp"
#include "dhsim/descriptor_state.hpp"
#include "dhsim/limits.hpp"
#include "dhsim/pauli.hpp"

namespace dhsim {

/// Per-component tolerance for v|0...0> = e^{-i theta} |0...0>.
inline constexpr double kStabilizerTol = 1e-10;

struct GaugeTransform {
  ComplexMatrix v;
  double theta = 0.0;  // radians

  static GaugeTransform identity(int n);
};

/// Throws StabilizerViolation (reference vector moved) or
/// std::invalid_argument (not unitary / not square).
void validate_gauge(const GaugeTransform& g, double tol = kStabilizerTol);

/// Time-parametrized gauge family V(t). Either a constant transform or
/// V(t) = exp(-i omega t G) for a diagonal generator G (letters I/Z only,
/// real coefficients), which stabilizes the reference vector at every t.
struct GaugeFamily {
  enum class Kind { kConstant, kExpGenerator };

  Kind kind = Kind::kConstant;
  GaugeTransform constant;  // kKind == kConstant
  PauliSum generator;       // kind == kExpGenerator
  double omega = 0.0;

  static GaugeFamily constant_family(GaugeTransform g);
  static GaugeFamily exp_generator(PauliSum generator, double omega);
};

/// Structural checks on the family definition (generator letters and
/// coefficient reality); conjugation-time stabilizer checks happen at the
/// sampled times of the flow integration.
void validate_family_structure(const GaugeFamily& fam);

/// V(t) with its phase on the reference vector.
GaugeTransform gauge_family_value(const GaugeFamily& fam, double t);

/// V(t)^dagger dV/dt, the anti-Hermitian frame velocity entering the
/// gauged flow equation.
ComplexMatrix frame_velocity(const GaugeFamily& fam, double t);

/// Deterministic-in-seed stabilizing unitary: a random phase on the
/// reference vector and a Haar-style random block on its orthogonal
/// complement.
GaugeTransform random_stabilizing_unitary(int n, std::uint64_t seed,
                                          Limits limits = {});

/// Conjugates every descriptor by g.v and extends the tracked unitary.
/// Rejects transforms violating the stabilizer or unitarity invariants.
DescriptorState apply_gauge(const DescriptorState& state,
                            const GaugeTransform& g);

/// Full-system density operator reconstructed from expectations; the
/// gauge-invariant representative of the state.
ComplexMatrix canonical_form(const DescriptorState& state);

/// True when the canonical forms agree within tol (max-norm).
bool gauge_equivalent(const DescriptorState& a, const DescriptorState& b,
                      double tol = 1e-8);

struct WitnessFailure {
  std::string reason;  // "untracked" | "inequivalent"
};
using WitnessResult = std::variant<GaugeTransform, WitnessFailure>;

/// For two gauge-equivalent tracked states, a stabilizing unitary V with
/// apply_gauge(a, V) reproducing b's descriptors. V is determined only up
/// to a global phase, so compare witnesses by conjugation action.
WitnessResult recover_witness(const DescriptorState& a,
                              const DescriptorState& b);

}  // namespace dhsim

#endif  // DHSIM_GAUGE_HPP
