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
// A discrete Aharonov-Bohm setup: a real-valued vector potential on the
// directed edges of a 2D lattice. Loop phases (discrete Wilson loops)
// are the gauge-invariant content; the flux of a single marked plaquette
// plays the solenoid.

#ifndef DHSIM_LATTICE_HPP
#define DHSIM_LATTICE_HPP

#include <string>
#include <variant>
#include <vector>

namespace dhsim {

struct Vertex {
  int x = 0;
  int y = 0;
  bool operator==(const Vertex&) const = default;
};

/// Unit step between adjacent vertices.
struct DirectedEdge {
  Vertex from;
  Vertex to;
  bool operator==(const DirectedEdge&) const = default;
};

/// Identified by its lower-left corner.
struct Plaquette {
  int x = 0;
  int y = 0;
  bool operator==(const Plaquette&) const = default;
};

/// Vector potential on canonical (rightward/upward) edges; traversing an
/// edge against its orientation negates the stored value. `coupling` is
/// the dimensionless charge entering the fringe shift.
class LatticeField {
 public:
  LatticeField(int width, int height, double coupling = 1.0);

  int width() const { return width_; }
  int height() const { return height_; }
  double coupling() const { return coupling_; }

  int plaquette_cols() const { return width_ - 1; }
  int plaquette_rows() const { return height_ - 1; }

  bool vertex_in_bounds(const Vertex& v) const;
  bool plaquette_in_bounds(const Plaquette& p) const;

  /// Signed value along a directed edge; throws on non-adjacent or
  /// out-of-bounds endpoints.
  double link(const DirectedEdge& e) const;
  void set_link(const DirectedEdge& e, double value);
  void add_link(const DirectedEdge& e, double value);

  /// Canonical storage, for serialization: horizontal_value(x, y) is the
  /// edge (x,y)->(x+1,y); vertical_value(x, y) is (x,y)->(x,y+1).
  double horizontal_value(int x, int y) const;
  double vertical_value(int x, int y) const;
  void set_horizontal(int x, int y, double value);
  void set_vertical(int x, int y, double value);

 private:
  int width_;
  int height_;
  double coupling_;
  std::vector<double> h_;  // (width-1) x height
  std::vector<double> v_;  // width x (height-1)
};

/// Real vertex function; gauging shifts each link by the head-tail
/// difference.
struct ScalarGauge {
  int width = 0;
  int height = 0;
  std::vector<double> f;  // width x height, row-major by y

  ScalarGauge() = default;
  ScalarGauge(int width, int height);
  double at(const Vertex& v) const;
  double& at(const Vertex& v);
};

struct Loop {
  std::vector<DirectedEdge> edges;
};

/// Builds a closed loop from a vertex sequence (first vertex repeated at
/// the end); consecutive vertices must be lattice-adjacent.
Loop loop_from_vertices(const std::vector<Vertex>& vertices);

/// Open edge chain from a vertex sequence.
std::vector<DirectedEdge> path_from_vertices(const std::vector<Vertex>& vertices);

Loop reverse_loop(const Loop& loop);

/// Signed sum of link values along a closed loop. Contributions are
/// accumulated per canonical edge with integer multiplicities, so
/// reversing the loop negates the phase exactly.
double loop_phase(const LatticeField& field, const Loop& loop);

/// Counterclockwise elementary loop phase of one unit square.
double plaquette_flux(const LatticeField& field, const Plaquette& p);

/// A' = A + (discrete gradient of f); every closed-loop phase is
/// unchanged.
LatticeField apply_scalar_gauge(const LatticeField& field,
                                const ScalarGauge& g);

/// Field whose flux map is phi at `p` and zero elsewhere, built by
/// loading a ray of vertical links from the plaquette's right edge out to
/// the lattice boundary.
LatticeField solenoid_field(int width, int height, const Plaquette& p,
                            double phi, double coupling = 1.0);

/// Signed crossing count of the loop around the plaquette's center.
int winding_number(const Loop& loop, const Plaquette& p);

struct GaugeFixFailure {
  std::string reason;  // "flux-obstructed" | "not-simply-connected"
};
using GaugeFixResult = std::variant<ScalarGauge, GaugeFixFailure>;

/// For an edge-connected, simply connected plaquette region with zero
/// flux throughout, produces f such that gauging kills every link of the
/// region (spanning-tree integration of A over the region's vertices).
GaugeFixResult gauge_fix_region(const LatticeField& field,
                                const std::vector<Plaquette>& region);

struct HomologyReport {
  double loop_phase = 0.0;
  /// Flux per plaquette, row-major by y (size plaquette_rows x cols).
  std::vector<double> plaquette_fluxes;
  double enclosed_flux = 0.0;  // winding-weighted sum
  bool obstructed = false;
  std::string verdict;  // "obstructed" | "decomposable"
};

/// Exhibits that a loop's phase equals its winding-weighted flux sum, so
/// a nonzero-phase loop cannot be a chain of zero-phase loops.
HomologyReport homology_obstruction_demo(const LatticeField& field,
                                         const Loop& loop);

/// coupling * (phase of path1 followed by path2 reversed); both paths
/// must share start and end vertices.
double fringe_shift(const LatticeField& field,
                    const std::vector<DirectedEdge>& path1,
                    const std::vector<DirectedEdge>& path2);

}  // namespace dhsim

#endif  // DHSIM_LATTICE_HPP
