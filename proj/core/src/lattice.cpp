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

#include "dhsim/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace dhsim {

namespace {

// Flux below this counts as zero when deciding gauge-fixability.
constexpr double kFluxTol = 1e-12;
// Loop phases below this count as decomposable in the homology verdict.
constexpr double kPhaseTol = 1e-9;

struct CanonicalEdge {
  bool horizontal;
  int x;
  int y;
  auto operator<=>(const CanonicalEdge&) const = default;
};

// Canonical form of a directed edge: the stored orientation plus the sign
// the traversal picks up.
std::pair<CanonicalEdge, int> canonicalize(const DirectedEdge& e) {
  const int dx = e.to.x - e.from.x;
  const int dy = e.to.y - e.from.y;
  if (dx == 1 && dy == 0) return {{true, e.from.x, e.from.y}, +1};
  if (dx == -1 && dy == 0) return {{true, e.to.x, e.to.y}, -1};
  if (dx == 0 && dy == 1) return {{false, e.from.x, e.from.y}, +1};
  if (dx == 0 && dy == -1) return {{false, e.to.x, e.to.y}, -1};
  throw std::invalid_argument("edge endpoints are not lattice-adjacent");
}

void check_chain(const std::vector<DirectedEdge>& edges) {
  if (edges.empty()) {
    throw std::invalid_argument("empty edge sequence");
  }
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i].to == edges[i + 1].from)) {
      throw std::invalid_argument("edges do not chain head-to-tail");
    }
  }
}

}  // namespace

LatticeField::LatticeField(int width, int height, double coupling)
    : width_(width), height_(height), coupling_(coupling) {
  if (width < 2 || height < 2) {
    throw std::invalid_argument("lattice needs at least 2x2 vertices");
  }
  h_.assign(std::size_t(width_ - 1) * height_, 0.0);
  v_.assign(std::size_t(width_) * (height_ - 1), 0.0);
}

bool LatticeField::vertex_in_bounds(const Vertex& v) const {
  return v.x >= 0 && v.x < width_ && v.y >= 0 && v.y < height_;
}

bool LatticeField::plaquette_in_bounds(const Plaquette& p) const {
  return p.x >= 0 && p.x < plaquette_cols() && p.y >= 0 &&
         p.y < plaquette_rows();
}

double LatticeField::horizontal_value(int x, int y) const {
  if (x < 0 || x >= width_ - 1 || y < 0 || y >= height_) {
    throw std::out_of_range("horizontal link out of bounds");
  }
  return h_[std::size_t(y) * (width_ - 1) + x];
}

double LatticeField::vertical_value(int x, int y) const {
  if (x < 0 || x >= width_ || y < 0 || y >= height_ - 1) {
    throw std::out_of_range("vertical link out of bounds");
  }
  return v_[std::size_t(y) * width_ + x];
}

void LatticeField::set_horizontal(int x, int y, double value) {
  if (x < 0 || x >= width_ - 1 || y < 0 || y >= height_) {
    throw std::out_of_range("horizontal link out of bounds");
  }
  h_[std::size_t(y) * (width_ - 1) + x] = value;
}

void LatticeField::set_vertical(int x, int y, double value) {
  if (x < 0 || x >= width_ || y < 0 || y >= height_ - 1) {
    throw std::out_of_range("vertical link out of bounds");
  }
  v_[std::size_t(y) * width_ + x] = value;
}

double LatticeField::link(const DirectedEdge& e) const {
  if (!vertex_in_bounds(e.from) || !vertex_in_bounds(e.to)) {
    throw std::out_of_range("edge endpoint out of bounds");
  }
  auto [canon, sign] = canonicalize(e);
  const double stored = canon.horizontal ? horizontal_value(canon.x, canon.y)
                                         : vertical_value(canon.x, canon.y);
  return sign * stored;
}

void LatticeField::set_link(const DirectedEdge& e, double value) {
  if (!vertex_in_bounds(e.from) || !vertex_in_bounds(e.to)) {
    throw std::out_of_range("edge endpoint out of bounds");
  }
  auto [canon, sign] = canonicalize(e);
  if (canon.horizontal) {
    set_horizontal(canon.x, canon.y, sign * value);
  } else {
    set_vertical(canon.x, canon.y, sign * value);
  }
}

void LatticeField::add_link(const DirectedEdge& e, double value) {
  set_link(e, link(e) + value);
}

ScalarGauge::ScalarGauge(int width, int height)
    : width(width), height(height), f(std::size_t(width) * height, 0.0) {}

double ScalarGauge::at(const Vertex& v) const {
  if (v.x < 0 || v.x >= width || v.y < 0 || v.y >= height) {
    throw std::out_of_range("scalar gauge vertex out of bounds");
  }
  return f[std::size_t(v.y) * width + v.x];
}

double& ScalarGauge::at(const Vertex& v) {
  if (v.x < 0 || v.x >= width || v.y < 0 || v.y >= height) {
    throw std::out_of_range("scalar gauge vertex out of bounds");
  }
  return f[std::size_t(v.y) * width + v.x];
}

Loop loop_from_vertices(const std::vector<Vertex>& vertices) {
  if (vertices.size() < 2 || !(vertices.front() == vertices.back())) {
    throw std::invalid_argument(
        "loop vertex list must repeat its first vertex at the end");
  }
  Loop loop;
  loop.edges = path_from_vertices(vertices);
  return loop;
}

std::vector<DirectedEdge> path_from_vertices(
    const std::vector<Vertex>& vertices) {
  if (vertices.size() < 2) {
    throw std::invalid_argument("path needs at least two vertices");
  }
  std::vector<DirectedEdge> edges;
  edges.reserve(vertices.size() - 1);
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const DirectedEdge e{vertices[i], vertices[i + 1]};
    canonicalize(e);  // adjacency check
    edges.push_back(e);
  }
  return edges;
}

Loop reverse_loop(const Loop& loop) {
  Loop out;
  out.edges.reserve(loop.edges.size());
  for (auto it = loop.edges.rbegin(); it != loop.edges.rend(); ++it) {
    out.edges.push_back(DirectedEdge{it->to, it->from});
  }
  return out;
}

double loop_phase(const LatticeField& field, const Loop& loop) {
  check_chain(loop.edges);
  if (!(loop.edges.back().to == loop.edges.front().from)) {
    throw std::invalid_argument("loop is not closed");
  }
  // Net integer multiplicity per canonical edge, then one deterministic
  // summation pass: reversal negates every multiplicity, hence the phase,
  // exactly.
  std::map<CanonicalEdge, long> counts;
  for (const DirectedEdge& e : loop.edges) {
    if (!field.vertex_in_bounds(e.from) || !field.vertex_in_bounds(e.to)) {
      throw std::out_of_range("loop leaves the lattice");
    }
    auto [canon, sign] = canonicalize(e);
    counts[canon] += sign;
  }
  double phase = 0.0;
  for (const auto& [canon, count] : counts) {
    if (count == 0) continue;
    const double stored = canon.horizontal
                              ? field.horizontal_value(canon.x, canon.y)
                              : field.vertical_value(canon.x, canon.y);
    phase += double(count) * stored;
  }
  return phase;
}

double plaquette_flux(const LatticeField& field, const Plaquette& p) {
  if (!field.plaquette_in_bounds(p)) {
    throw std::out_of_range("plaquette out of bounds");
  }
  return field.horizontal_value(p.x, p.y) + field.vertical_value(p.x + 1, p.y) -
         field.horizontal_value(p.x, p.y + 1) - field.vertical_value(p.x, p.y);
}

LatticeField apply_scalar_gauge(const LatticeField& field,
                                const ScalarGauge& g) {
  if (g.width != field.width() || g.height != field.height()) {
    throw std::invalid_argument("scalar gauge dimensions do not match field");
  }
  LatticeField out = field;
  for (int y = 0; y < field.height(); ++y) {
    for (int x = 0; x + 1 < field.width(); ++x) {
      out.set_horizontal(x, y,
                         field.horizontal_value(x, y) +
                             g.at({x + 1, y}) - g.at({x, y}));
    }
  }
  for (int y = 0; y + 1 < field.height(); ++y) {
    for (int x = 0; x < field.width(); ++x) {
      out.set_vertical(x, y,
                       field.vertical_value(x, y) + g.at({x, y + 1}) -
                           g.at({x, y}));
    }
  }
  return out;
}

LatticeField solenoid_field(int width, int height, const Plaquette& p,
                            double phi, double coupling) {
  LatticeField field(width, height, coupling);
  if (!field.plaquette_in_bounds(p)) {
    throw std::out_of_range("solenoid plaquette out of bounds");
  }
  // Ray of vertical links from the plaquette's right edge to the
  // boundary: each interior plaquette on the ray sees +phi and -phi on
  // opposite edges, so only the marked plaquette keeps net flux.
  for (int x = p.x + 1; x < width; ++x) {
    field.set_vertical(x, p.y, phi);
  }
  return field;
}

int winding_number(const Loop& loop, const Plaquette& p) {
  // Crossing count along the ray heading +x from the plaquette center:
  // upward edges to the right contribute +1, downward -1.
  int winding = 0;
  for (const DirectedEdge& e : loop.edges) {
    if (e.from.x != e.to.x) continue;  // horizontal edges never cross
    const int x = e.from.x;
    if (x <= p.x) continue;
    const int ylow = std::min(e.from.y, e.to.y);
    if (ylow != p.y) continue;
    winding += (e.to.y > e.from.y) ? 1 : -1;
  }
  return winding;
}

GaugeFixResult gauge_fix_region(const LatticeField& field,
                                const std::vector<Plaquette>& region) {
  std::set<std::pair<int, int>> plaqs;
  for (const Plaquette& p : region) {
    if (!field.plaquette_in_bounds(p)) {
      return GaugeFixFailure{"not-simply-connected"};
    }
    plaqs.insert({p.x, p.y});
  }
  if (plaqs.empty()) {
    return GaugeFixFailure{"not-simply-connected"};
  }

  // Edge-connectivity over shared plaquette edges.
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> queue{*plaqs.begin()};
  seen.insert(*plaqs.begin());
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    const std::pair<int, int> nbrs[4] = {
        {x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
    for (const auto& nb : nbrs) {
      if (plaqs.count(nb) && !seen.count(nb)) {
        seen.insert(nb);
        queue.push_back(nb);
      }
    }
  }
  if (seen.size() != plaqs.size()) {
    return GaugeFixFailure{"not-simply-connected"};
  }

  // Corners and edges of the region; Euler characteristic 1 means no
  // holes.
  std::set<std::pair<int, int>> corners;
  std::set<CanonicalEdge> edges;
  for (const auto& [x, y] : plaqs) {
    corners.insert({x, y});
    corners.insert({x + 1, y});
    corners.insert({x, y + 1});
    corners.insert({x + 1, y + 1});
    edges.insert({true, x, y});
    edges.insert({true, x, y + 1});
    edges.insert({false, x, y});
    edges.insert({false, x + 1, y});
  }
  const long euler = long(corners.size()) - long(edges.size()) +
                     long(plaqs.size());
  if (euler != 1) {
    return GaugeFixFailure{"not-simply-connected"};
  }

  for (const auto& [x, y] : plaqs) {
    if (std::abs(plaquette_flux(field, {x, y})) > kFluxTol) {
      return GaugeFixFailure{"flux-obstructed"};
    }
  }

  // Spanning-tree integration of A over the region's vertex graph: fix
  // f at the root and set f(head) = f(tail) - A along tree edges; the
  // remaining region edges vanish because every region plaquette is
  // flux-free and the region has no holes.
  ScalarGauge g(field.width(), field.height());
  std::set<std::pair<int, int>> assigned;
  const auto root = *corners.begin();
  assigned.insert(root);
  std::deque<std::pair<int, int>> vqueue{root};
  while (!vqueue.empty()) {
    auto [x, y] = vqueue.front();
    vqueue.pop_front();
    const Vertex u{x, y};
    const std::pair<int, int> nbrs[4] = {
        {x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
    for (const auto& [nx, ny] : nbrs) {
      if (!corners.count({nx, ny}) || assigned.count({nx, ny})) continue;
      const DirectedEdge step{u, Vertex{nx, ny}};
      auto [canon, sign] = canonicalize(step);
      if (!edges.count(canon)) continue;  // stay inside the region
      g.at({nx, ny}) = g.at(u) - field.link(step);
      assigned.insert({nx, ny});
      vqueue.push_back({nx, ny});
    }
  }
  return g;
}

HomologyReport homology_obstruction_demo(const LatticeField& field,
                                         const Loop& loop) {
  HomologyReport report;
  report.loop_phase = loop_phase(field, loop);
  report.plaquette_fluxes.reserve(std::size_t(field.plaquette_rows()) *
                                  field.plaquette_cols());
  double enclosed = 0.0;
  for (int y = 0; y < field.plaquette_rows(); ++y) {
    for (int x = 0; x < field.plaquette_cols(); ++x) {
      const double flux = plaquette_flux(field, {x, y});
      report.plaquette_fluxes.push_back(flux);
      const int w = winding_number(loop, {x, y});
      if (w != 0) enclosed += double(w) * flux;
    }
  }
  report.enclosed_flux = enclosed;
  report.obstructed = std::abs(report.loop_phase) > kPhaseTol;
  report.verdict = report.obstructed ? "obstructed" : "decomposable";
  return report;
}

double fringe_shift(const LatticeField& field,
                    const std::vector<DirectedEdge>& path1,
                    const std::vector<DirectedEdge>& path2) {
  check_chain(path1);
  check_chain(path2);
  if (path1.front().from == path1.back().to ||
      path2.front().from == path2.back().to) {
    throw std::invalid_argument("fringe_shift: paths must be open");
  }
  if (!(path1.front().from == path2.front().from) ||
      !(path1.back().to == path2.back().to)) {
    throw std::invalid_argument(
        "fringe_shift: paths must share start and end vertices");
  }
  Loop loop;
  loop.edges = path1;
  for (auto it = path2.rbegin(); it != path2.rend(); ++it) {
    loop.edges.push_back(DirectedEdge{it->to, it->from});
  }
  return field.coupling() * loop_phase(field, loop);
}

}  // namespace dhsim
