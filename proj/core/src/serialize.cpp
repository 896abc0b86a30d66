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

#include "dhsim/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dhsim/errors.hpp"
#include "dhsim/tensor.hpp"
#include "json.hpp"

namespace dhsim {

namespace {

using nlohmann::json;

void check_version(const json& j, const char* what) {
  if (!j.is_object()) {
    throw ParseError(std::string(what) + ": expected a JSON object");
  }
  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
      throw ParseError(std::string(what) + ": unsupported version");
    }
  }
}

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j, const char* what) {
  if (j.is_number()) {
    return Complex(j.get<double>(), 0.0);
  }
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw ParseError(std::string(what) + ": expected a number or [re, im]");
}

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (const Complex& z : m.data()) {
    data.push_back(complex_to_json(z));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

ComplexMatrix matrix_from_json(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("data") || !j["data"].is_array()) {
    throw ParseError(std::string(what) +
                     ": expected {rows, cols, data} matrix object");
  }
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  const json& data = j["data"];
  if (data.size() != rows * cols) {
    throw ParseError(std::string(what) + ": matrix data length mismatch");
  }
  std::vector<Complex> entries;
  entries.reserve(data.size());
  for (const json& cell : data) {
    entries.push_back(complex_from_json(cell, what));
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

json pauli_sum_to_json(const PauliSum& s) {
  json terms = json::array();
  for (const PauliTerm& t : s.terms()) {
    terms.push_back(json{{"pauli", t.string.str()},
                         {"coeff", complex_to_json(t.coeff)}});
  }
  return json{{"terms", terms}};
}

PauliSum pauli_sum_from_json(const json& j, const char* what,
                             int expected_n = -1) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
    throw ParseError(std::string(what) + ": expected {terms: [...]}");
  }
  std::vector<PauliTerm> terms;
  int n = expected_n;
  for (const json& term : j["terms"]) {
    if (!term.is_object() || !term.contains("pauli") ||
        !term["pauli"].is_string() || !term.contains("coeff")) {
      throw ParseError(std::string(what) +
                       ": each term needs {pauli, coeff}");
    }
    PauliString s(term["pauli"].get<std::string>());
    if (n < 0) n = s.size();
    if (s.size() != n) {
      throw ParseError(std::string(what) + ": inconsistent string lengths");
    }
    terms.push_back({complex_from_json(term["coeff"], what), s});
  }
  if (n < 0) {
    throw ParseError(std::string(what) + ": empty term list");
  }
  return PauliSum::from_terms(n, std::move(terms));
}

json parse_root(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError(std::string(what) + ": malformed JSON");
  }
  return j;
}

Vertex vertex_from_json(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw ParseError(std::string(what) + ": expected [x, y]");
  }
  return Vertex{j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file '" + path + "'");
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file_atomic(const std::string& path,
                            const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot write file '" + tmp + "'");
    }
    out << content;
    out.flush();
    if (!out) {
      throw std::runtime_error("write failed for '" + tmp + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

Circuit parse_circuit_json(const std::string& text) {
  const json j = parse_root(text, "circuit");
  check_version(j, "circuit");
  if (!j.contains("qubits") || !j["qubits"].is_number_integer()) {
    throw ParseError("circuit: missing integer field 'qubits'");
  }
  Circuit c;
  c.n = j["qubits"].get<int>();
  if (j.contains("ops")) {
    if (!j["ops"].is_array()) {
      throw ParseError("circuit: 'ops' must be an array");
    }
    for (const json& op : j["ops"]) {
      if (!op.is_object() || !op.contains("gate") || !op["gate"].is_string() ||
          !op.contains("targets") || !op["targets"].is_array()) {
        throw ParseError("circuit: each op needs {gate, targets}");
      }
      Gate g;
      g.kind = gate_kind_from_name(op["gate"].get<std::string>());
      for (const json& t : op["targets"]) {
        if (!t.is_number_integer()) {
          throw ParseError("circuit: targets must be integers");
        }
        g.targets.push_back(t.get<int>());
      }
      if (op.contains("params")) {
        for (const json& p : op["params"]) {
          if (!p.is_number()) {
            throw ParseError("circuit: params must be numbers");
          }
          g.params.push_back(p.get<double>());
        }
      }
      if (op.contains("matrix")) {
        g.custom = matrix_from_json(op["matrix"], "circuit custom gate");
      }
      c.ops.push_back(std::move(g));
    }
  }
  try {
    validate_circuit(c);
  } catch (const std::exception& e) {
    throw ParseError(std::string("circuit: ") + e.what());
  }
  return c;
}

std::string circuit_to_json(const Circuit& c) {
  json ops = json::array();
  for (const Gate& g : c.ops) {
    json op{{"gate", gate_name(g.kind)}, {"targets", g.targets}};
    if (!g.params.empty()) op["params"] = g.params;
    if (g.custom) op["matrix"] = matrix_to_json(*g.custom);
    ops.push_back(std::move(op));
  }
  return json{{"version", 1}, {"qubits", c.n}, {"ops", ops}}.dump(2);
}

HamiltonianSpec parse_hamiltonian_json(const std::string& text) {
  const json j = parse_root(text, "hamiltonian");
  check_version(j, "hamiltonian");
  const PauliSum sum = pauli_sum_from_json(j, "hamiltonian");
  try {
    return make_hamiltonian(sum);
  } catch (const std::exception& e) {
    throw ParseError(std::string("hamiltonian: ") + e.what());
  }
}

std::vector<PauliString> parse_observables_json(const std::string& text) {
  const json j = parse_root(text, "observables");
  check_version(j, "observables");
  if (!j.contains("observables") || !j["observables"].is_array() ||
      j["observables"].empty()) {
    throw ParseError("observables: missing non-empty array 'observables'");
  }
  std::vector<PauliString> out;
  for (const json& s : j["observables"]) {
    if (!s.is_string()) {
      throw ParseError("observables: entries must be Pauli strings");
    }
    try {
      out.emplace_back(s.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("observables: ") + e.what());
    }
    if (out.back().size() != out.front().size()) {
      throw ParseError("observables: inconsistent string lengths");
    }
  }
  return out;
}

GaugeSpec parse_gauge_json(const std::string& text) {
  const json j = parse_root(text, "gauge");
  check_version(j, "gauge");
  if (!j.contains("type") || !j["type"].is_string()) {
    throw ParseError("gauge: missing string field 'type'");
  }
  const std::string type = j["type"].get<std::string>();
  GaugeSpec spec;
  if (type == "random_stabilizing") {
    spec.kind = GaugeSpec::Kind::kRandomStabilizing;
    if (!j.contains("seed") || !j["seed"].is_number_integer()) {
      throw ParseError("gauge: random_stabilizing requires an integer seed");
    }
    spec.seed = j["seed"].get<std::uint64_t>();
  } else if (type == "exp_generator") {
    spec.kind = GaugeSpec::Kind::kExpGenerator;
    if (!j.contains("generator")) {
      throw ParseError("gauge: exp_generator requires 'generator'");
    }
    spec.generator = pauli_sum_from_json(j["generator"], "gauge generator");
    if (!j.contains("omega") || !j["omega"].is_number()) {
      throw ParseError("gauge: exp_generator requires numeric 'omega'");
    }
    spec.omega = j["omega"].get<double>();
    if (j.contains("t")) {
      if (!j["t"].is_number()) {
        throw ParseError("gauge: 't' must be a number");
      }
      spec.t = j["t"].get<double>();
    }
  } else if (type == "explicit") {
    spec.kind = GaugeSpec::Kind::kExplicit;
    if (!j.contains("matrix")) {
      throw ParseError("gauge: explicit requires 'matrix'");
    }
    spec.matrix = matrix_from_json(j["matrix"], "gauge matrix");
    if (!j.contains("theta") || !j["theta"].is_number()) {
      throw ParseError("gauge: explicit requires numeric 'theta'");
    }
    spec.theta = j["theta"].get<double>();
  } else {
    throw ParseError("gauge: unknown type '" + type + "'");
  }
  return spec;
}

GaugeTransform resolve_gauge_transform(
    const GaugeSpec& spec, int n, std::optional<std::uint64_t> seed_override,
    Limits limits) {
  switch (spec.kind) {
    case GaugeSpec::Kind::kRandomStabilizing:
      return random_stabilizing_unitary(n, seed_override.value_or(spec.seed),
                                        limits);
    case GaugeSpec::Kind::kExpGenerator:
      return gauge_family_value(resolve_gauge_family(spec, n, seed_override,
                                                     limits),
                                spec.t);
    case GaugeSpec::Kind::kExplicit: {
      GaugeTransform g{*spec.matrix, spec.theta};
      if (g.v.rows() != (std::size_t(1) << n)) {
        throw ParseError("gauge: explicit matrix dimension mismatch");
      }
      validate_gauge(g);
      return g;
    }
  }
  throw std::logic_error("resolve_gauge_transform: unreachable");
}

GaugeFamily resolve_gauge_family(const GaugeSpec& spec, int n,
                                 std::optional<std::uint64_t> seed_override,
                                 Limits limits) {
  if (spec.kind == GaugeSpec::Kind::kExpGenerator) {
    if (spec.generator.num_qubits() != n) {
      throw ParseError("gauge: generator length does not match qubit count");
    }
    GaugeFamily fam = GaugeFamily::exp_generator(spec.generator, spec.omega);
    validate_family_structure(fam);
    return fam;
  }
  return GaugeFamily::constant_family(
      resolve_gauge_transform(spec, n, seed_override, limits));
}

std::string gauge_transform_to_json(const GaugeTransform& g) {
  return json{{"version", 1},
              {"type", "explicit"},
              {"matrix", matrix_to_json(g.v)},
              {"theta", g.theta}}
      .dump(2);
}

LatticeAnalysisSpec parse_lattice_json(const std::string& text) {
  const json j = parse_root(text, "lattice");
  check_version(j, "lattice");
  if (!j.contains("width") || !j.contains("height")) {
    throw ParseError("lattice: missing 'width'/'height'");
  }
  const int width = j["width"].get<int>();
  const int height = j["height"].get<int>();
  double coupling = 1.0;
  if (j.contains("coupling")) {
    if (!j["coupling"].is_number()) {
      throw ParseError("lattice: 'coupling' must be a number");
    }
    coupling = j["coupling"].get<double>();
  }
  LatticeField field = [&] {
    try {
      return LatticeField(width, height, coupling);
    } catch (const std::exception& e) {
      throw ParseError(std::string("lattice: ") + e.what());
    }
  }();
  if (j.contains("links")) {
    const json& links = j["links"];
    if (!links.is_object() || !links.contains("h") || !links.contains("v")) {
      throw ParseError("lattice: 'links' needs 'h' and 'v' row arrays");
    }
    const json& h = links["h"];
    const json& v = links["v"];
    if (!h.is_array() || static_cast<int>(h.size()) != height) {
      throw ParseError("lattice: 'h' must have one row per vertex row");
    }
    for (int y = 0; y < height; ++y) {
      if (!h[y].is_array() || static_cast<int>(h[y].size()) != width - 1) {
        throw ParseError("lattice: 'h' rows must have width-1 entries");
      }
      for (int x = 0; x < width - 1; ++x) {
        field.set_horizontal(x, y, h[y][x].get<double>());
      }
    }
    if (!v.is_array() || static_cast<int>(v.size()) != height - 1) {
      throw ParseError("lattice: 'v' must have height-1 rows");
    }
    for (int y = 0; y < height - 1; ++y) {
      if (!v[y].is_array() || static_cast<int>(v[y].size()) != width) {
        throw ParseError("lattice: 'v' rows must have width entries");
      }
      for (int x = 0; x < width; ++x) {
        field.set_vertical(x, y, v[y][x].get<double>());
      }
    }
  }
  LatticeAnalysisSpec spec(std::move(field));
  if (j.contains("loops")) {
    for (const json& loop : j["loops"]) {
      std::vector<Vertex> vertices;
      for (const json& v : loop) {
        vertices.push_back(vertex_from_json(v, "lattice loop"));
      }
      spec.loops.push_back(std::move(vertices));
    }
  }
  if (j.contains("regions")) {
    for (const json& region : j["regions"]) {
      std::vector<Plaquette> plaqs;
      for (const json& p : region) {
        const Vertex v = vertex_from_json(p, "lattice region");
        plaqs.push_back(Plaquette{v.x, v.y});
      }
      spec.regions.push_back(std::move(plaqs));
    }
  }
  if (j.contains("paths")) {
    const json& paths = j["paths"];
    if (!paths.is_object() || !paths.contains("a") || !paths.contains("b")) {
      throw ParseError("lattice: 'paths' needs vertex lists 'a' and 'b'");
    }
    std::vector<Vertex> a, b;
    for (const json& v : paths["a"]) a.push_back(vertex_from_json(v, "path a"));
    for (const json& v : paths["b"]) b.push_back(vertex_from_json(v, "path b"));
    spec.paths = std::make_pair(std::move(a), std::move(b));
  }
  return spec;
}

std::string lattice_to_json(const LatticeField& field) {
  json h = json::array();
  for (int y = 0; y < field.height(); ++y) {
    json row = json::array();
    for (int x = 0; x + 1 < field.width(); ++x) {
      row.push_back(field.horizontal_value(x, y));
    }
    h.push_back(std::move(row));
  }
  json v = json::array();
  for (int y = 0; y + 1 < field.height(); ++y) {
    json row = json::array();
    for (int x = 0; x < field.width(); ++x) {
      row.push_back(field.vertical_value(x, y));
    }
    v.push_back(std::move(row));
  }
  return json{{"version", 1},
              {"width", field.width()},
              {"height", field.height()},
              {"coupling", field.coupling()},
              {"links", json{{"h", h}, {"v", v}}}}
      .dump(2);
}

std::string snapshot_to_json(const DescriptorState& state) {
  json descriptors = json::array();
  for (int q = 0; q < state.num_qubits(); ++q) {
    json triple = json::array();
    for (Axis a : kAxes) {
      if (state.backend() == Backend::kDense) {
        triple.push_back(matrix_to_json(state.dense_descriptor(q, a)));
      } else {
        triple.push_back(pauli_sum_to_json(state.pauli_descriptor(q, a)));
      }
    }
    descriptors.push_back(std::move(triple));
  }
  json out{{"version", 1},
           {"n", state.num_qubits()},
           {"backend",
            state.backend() == Backend::kDense ? "dense" : "pauli-sum"},
           {"descriptors", descriptors}};
  if (state.has_tracked_unitary()) {
    out["tracked_unitary"] = matrix_to_json(state.tracked_unitary());
  }
  return out.dump(2);
}

DescriptorState parse_snapshot_json(const std::string& text, Limits limits) {
  const json j = parse_root(text, "snapshot");
  check_version(j, "snapshot");
  if (!j.contains("n") || !j["n"].is_number_integer() ||
      !j.contains("backend") || !j["backend"].is_string() ||
      !j.contains("descriptors") || !j["descriptors"].is_array()) {
    throw ParseError("snapshot: needs {n, backend, descriptors}");
  }
  const int n = j["n"].get<int>();
  const std::string backend_name = j["backend"].get<std::string>();
  Backend backend;
  if (backend_name == "dense") {
    backend = Backend::kDense;
  } else if (backend_name == "pauli-sum") {
    backend = Backend::kPauliSum;
  } else {
    throw ParseError("snapshot: unknown backend '" + backend_name + "'");
  }
  if (backend == Backend::kDense && n > limits.dense_cap) {
    throw CapExceeded("snapshot: " + std::to_string(n) +
                      " qubits exceeds dense cap " +
                      std::to_string(limits.dense_cap));
  }
  const json& descriptors = j["descriptors"];
  if (static_cast<int>(descriptors.size()) != n) {
    throw ParseError("snapshot: descriptor list length != n");
  }
  std::vector<ComplexMatrix> dense;
  std::vector<PauliSum> sums;
  for (const json& triple : descriptors) {
    if (!triple.is_array() || triple.size() != 3) {
      throw ParseError("snapshot: each qubit needs an [x, y, z] triple");
    }
    for (const json& entry : triple) {
      if (backend == Backend::kDense) {
        dense.push_back(matrix_from_json(entry, "snapshot descriptor"));
      } else {
        sums.push_back(pauli_sum_from_json(entry, "snapshot descriptor", n));
      }
    }
  }
  std::optional<ComplexMatrix> frame;
  if (j.contains("tracked_unitary")) {
    frame = matrix_from_json(j["tracked_unitary"], "snapshot tracked unitary");
  }
  try {
    DescriptorState state(n, backend, limits, std::move(dense),
                          std::move(sums), std::move(frame));
    state.validate();
    return state;
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("snapshot: ") + e.what());
  }
}

}  // namespace dhsim
