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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>

#include "dhsim/errors.hpp"
#include "dhsim/evolution.hpp"
#include "dhsim/serialize.hpp"
#include "dhsim/tensor.hpp"
#include "test_support.hpp"

using namespace dhsim;
using dhsim::testing::random_circuit;

TEST_CASE("circuit JSON round trip") {
  Circuit c;
  c.n = 3;
  c.ops = {Gate::single(GateKind::kH, 0), Gate::two(GateKind::kCNOT, 0, 2),
           Gate::rotation(GateKind::kRZ, 1, 0.5)};
  const Circuit back = parse_circuit_json(circuit_to_json(c));
  REQUIRE(back.n == 3);
  REQUIRE(back.ops.size() == 3);
  CHECK(back.ops[0].kind == GateKind::kH);
  CHECK(back.ops[1].targets == std::vector<int>{0, 2});
  CHECK(back.ops[2].params[0] == doctest::Approx(0.5));
}

TEST_CASE("circuit JSON accepts the documented shape") {
  const std::string text = R"({
    "qubits": 2,
    "ops": [
      {"gate": "H", "targets": [0]},
      {"gate": "RZ", "targets": [0], "params": [0.5]},
      {"gate": "CNOT", "targets": [0, 1]}
    ]
  })";
  const Circuit c = parse_circuit_json(text);
  CHECK(c.n == 2);
  CHECK(c.ops.size() == 3);
}

TEST_CASE("circuit JSON errors") {
  CHECK_THROWS_AS(parse_circuit_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_circuit_json(R"({"ops": []})"), ParseError);
  CHECK_THROWS_AS(parse_circuit_json(R"({"qubits": 1, "version": 9})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_circuit_json(
          R"({"qubits": 1, "ops": [{"gate": "WARP", "targets": [0]}]})"),
      ParseError);
  // Structural gate problems surface as parse errors too.
  CHECK_THROWS_AS(
      parse_circuit_json(
          R"({"qubits": 1, "ops": [{"gate": "CNOT", "targets": [0, 1]}]})"),
      ParseError);
}

TEST_CASE("custom gates carry their matrices through JSON") {
  Circuit c;
  c.n = 1;
  c.ops = {Gate::custom_gate(gate_matrix(Gate::single(GateKind::kT, 0)), {0})};
  const Circuit back = parse_circuit_json(circuit_to_json(c));
  REQUIRE(back.ops.size() == 1);
  REQUIRE(back.ops[0].custom.has_value());
  CHECK(max_norm_diff(*back.ops[0].custom,
                      gate_matrix(Gate::single(GateKind::kT, 0))) < 1e-15);
}

TEST_CASE("hamiltonian JSON") {
  const HamiltonianSpec h = parse_hamiltonian_json(
      R"({"terms": [{"pauli": "ZZI", "coeff": 0.7},
                    {"pauli": "IXX", "coeff": -0.25}]})");
  CHECK(h.terms.num_qubits() == 3);
  CHECK(h.terms.term_count() == 2);

  CHECK_THROWS_AS(
      parse_hamiltonian_json(
          R"({"terms": [{"pauli": "Z", "coeff": [0.1, 0.5]}]})"),
      ParseError);
  CHECK_THROWS_AS(parse_hamiltonian_json(R"({"terms": []})"), ParseError);
  CHECK_THROWS_AS(
      parse_hamiltonian_json(
          R"({"terms": [{"pauli": "Z", "coeff": 1.0},
                        {"pauli": "ZZ", "coeff": 1.0}]})"),
      ParseError);
}

TEST_CASE("observables JSON") {
  const std::vector<PauliString> obs =
      parse_observables_json(R"({"observables": ["ZZ", "ZI"]})");
  REQUIRE(obs.size() == 2);
  CHECK(obs[0].str() == "ZZ");
  CHECK_THROWS_AS(parse_observables_json(R"({"observables": []})"),
                  ParseError);
  CHECK_THROWS_AS(parse_observables_json(R"({"observables": ["Z", "ZZ"]})"),
                  ParseError);
}

TEST_CASE("gauge JSON inputs") {
  const GaugeSpec random =
      parse_gauge_json(R"({"type": "random_stabilizing", "seed": 42})");
  CHECK(random.kind == GaugeSpec::Kind::kRandomStabilizing);
  const GaugeTransform g = resolve_gauge_transform(random, 2);
  CHECK_NOTHROW(validate_gauge(g));
  CHECK(max_norm_diff(g.v, random_stabilizing_unitary(2, 42).v) == 0.0);

  // --seed-override replaces the file seed.
  const GaugeTransform g7 = resolve_gauge_transform(random, 2, 7);
  CHECK(max_norm_diff(g7.v, random_stabilizing_unitary(2, 7).v) == 0.0);

  // Seeds are mandatory for stochastic inputs.
  CHECK_THROWS_AS(parse_gauge_json(R"({"type": "random_stabilizing"})"),
                  ParseError);

  const GaugeSpec family = parse_gauge_json(
      R"({"type": "exp_generator",
          "generator": {"terms": [{"pauli": "ZI", "coeff": 0.7}]},
          "omega": 1.0, "t": 0.5})");
  const GaugeFamily fam = resolve_gauge_family(family, 2);
  CHECK(fam.kind == GaugeFamily::Kind::kExpGenerator);
  const GaugeTransform value = resolve_gauge_transform(family, 2);
  CHECK_NOTHROW(validate_gauge(value, 1e-9));

  const GaugeTransform id = GaugeTransform::identity(1);
  const GaugeSpec explicit_spec =
      parse_gauge_json(gauge_transform_to_json(id));
  CHECK(explicit_spec.kind == GaugeSpec::Kind::kExplicit);
  const GaugeTransform id_back = resolve_gauge_transform(explicit_spec, 1);
  CHECK(max_norm_diff(id_back.v, id.v) == 0.0);

  CHECK_THROWS_AS(resolve_gauge_transform(explicit_spec, 2), ParseError);
  CHECK_THROWS_AS(parse_gauge_json(R"({"type": "mystery"})"), ParseError);
}

TEST_CASE("lattice JSON round trip") {
  const LatticeField field =
      dhsim::testing::random_lattice_field(4, 3, 7, 2.0);
  const LatticeAnalysisSpec back = parse_lattice_json(lattice_to_json(field));
  CHECK(back.field.width() == 4);
  CHECK(back.field.height() == 3);
  CHECK(back.field.coupling() == 2.0);
  for (int y = 0; y < 3; ++y) {
    for (int x = 0; x < 3; ++x) {
      CHECK(back.field.horizontal_value(x, y) ==
            field.horizontal_value(x, y));
    }
  }
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 4; ++x) {
      CHECK(back.field.vertical_value(x, y) == field.vertical_value(x, y));
    }
  }
}

TEST_CASE("lattice JSON with analysis extras") {
  const std::string text = R"({
    "width": 3, "height": 3, "coupling": 1.5,
    "links": {"h": [[0.1, 0.2], [0, 0], [0, 0]],
              "v": [[0, 0, 0], [0.3, 0, 0]]},
    "loops": [[[0,0],[1,0],[1,1],[0,1],[0,0]]],
    "regions": [[[0,0],[1,0]]],
    "paths": {"a": [[0,0],[1,0],[2,0]], "b": [[0,0],[0,1],[1,1],[2,1],[2,0]]}
  })";
  const LatticeAnalysisSpec spec = parse_lattice_json(text);
  CHECK(spec.field.horizontal_value(1, 0) == 0.2);
  CHECK(spec.field.vertical_value(0, 1) == 0.3);
  REQUIRE(spec.loops.size() == 1);
  CHECK(spec.loops[0].size() == 5);
  REQUIRE(spec.regions.size() == 1);
  CHECK(spec.regions[0][1] == Plaquette{1, 0});
  REQUIRE(spec.paths.has_value());

  CHECK_THROWS_AS(parse_lattice_json(R"({"width": 3})"), ParseError);
  CHECK_THROWS_AS(
      parse_lattice_json(
          R"({"width": 3, "height": 3, "links": {"h": [[1]], "v": []}})"),
      ParseError);
}

TEST_CASE("snapshot round trips preserve the state") {
  Circuit bell;
  bell.n = 2;
  bell.ops = {Gate::single(GateKind::kH, 0), Gate::two(GateKind::kCNOT, 0, 1)};

  SUBCASE("dense backend") {
    const DescriptorState state =
        run_circuit(DescriptorState::init(2, Backend::kDense), bell);
    const DescriptorState back = parse_snapshot_json(snapshot_to_json(state));
    CHECK(back.backend() == Backend::kDense);
    for (int q = 0; q < 2; ++q) {
      for (Axis a : kAxes) {
        CHECK(max_norm_diff(back.dense_descriptor(q, a),
                            state.dense_descriptor(q, a)) < 1e-15);
      }
    }
    REQUIRE(back.has_tracked_unitary());
    CHECK(max_norm_diff(back.tracked_unitary(), state.tracked_unitary()) <
          1e-15);
  }

  SUBCASE("pauli backend") {
    const DescriptorState state =
        run_circuit(DescriptorState::init(2, Backend::kPauliSum), bell);
    const DescriptorState back = parse_snapshot_json(snapshot_to_json(state));
    CHECK(back.backend() == Backend::kPauliSum);
    for (int q = 0; q < 2; ++q) {
      for (Axis a : kAxes) {
        CHECK(coeff_distance(back.pauli_descriptor(q, a),
                             state.pauli_descriptor(q, a)) < 1e-15);
      }
    }
  }

  SUBCASE("random circuit states survive") {
    const Circuit c = random_circuit(3, 10, 99);
    const DescriptorState state =
        run_circuit(DescriptorState::init(3, Backend::kDense), c);
    const DescriptorState back = parse_snapshot_json(snapshot_to_json(state));
    for (int q = 0; q < 3; ++q) {
      for (Axis a : kAxes) {
        CHECK(max_norm_diff(back.dense_descriptor(q, a),
                            state.dense_descriptor(q, a)) < 1e-15);
      }
    }
  }
}

TEST_CASE("snapshots are validated on load") {
  // A zero Pauli-sum descriptor cannot square to the identity.
  const std::string bad = R"({
    "version": 1, "n": 1, "backend": "pauli-sum",
    "descriptors": [[
      {"terms": [{"pauli": "X", "coeff": 1.0}]},
      {"terms": [{"pauli": "Y", "coeff": 1.0}]},
      {"terms": []}
    ]]
  })";
  CHECK_THROWS_AS(parse_snapshot_json(bad), ParseError);

  // Non-Hermitian dense descriptors are rejected.
  const DescriptorState good = DescriptorState::init(1, Backend::kDense);
  std::string text = snapshot_to_json(good);
  const std::size_t pos = text.find("\"backend\"");
  REQUIRE(pos != std::string::npos);
  CHECK_THROWS_AS(parse_snapshot_json("{}"), ParseError);

  Limits tight;
  tight.dense_cap = 1;
  const DescriptorState wide = DescriptorState::init(2, Backend::kDense);
  CHECK_THROWS_AS(parse_snapshot_json(snapshot_to_json(wide), tight),
                  CapExceeded);
}

TEST_CASE("atomic writes leave no temporary behind") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "dhsim_serialize_test";
  fs::create_directories(dir);
  const std::string path = (dir / "out.json").string();
  write_text_file_atomic(path, "{\"version\": 1}\n");
  CHECK(read_text_file(path) == "{\"version\": 1}\n");
  CHECK_FALSE(fs::exists(path + ".tmp"));
  fs::remove_all(dir);

  CHECK_THROWS_AS(read_text_file("/nonexistent/nowhere.json"), ParseError);
}
