// Copyright 2024 the iceberg-qed authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "iceberg/circuit.hpp"

#include "doctest.h"
#include "iceberg/rng.hpp"
#include "test_matrices.hpp"

using namespace iceberg;

namespace {

Circuit random_unitary_circuit(int n, int gates, Rng& rng) {
  Circuit c(n);
  for (int g = 0; g < gates; ++g) {
    switch (rng.below(6)) {
      case 0: c.h(static_cast<int>(rng.below(n))); break;
      case 1: c.s(static_cast<int>(rng.below(n))); break;
      case 2: c.sdg(static_cast<int>(rng.below(n))); break;
      case 3: c.x(static_cast<int>(rng.below(n))); break;
      case 4: {
        int a = static_cast<int>(rng.below(n));
        int b = static_cast<int>(rng.below(n - 1));
        if (b >= a) ++b;
        c.cnot(a, b);
        break;
      }
      default: {
        int a = static_cast<int>(rng.below(n));
        int b = static_cast<int>(rng.below(n - 1));
        if (b >= a) ++b;
        c.ms(a, b, rng.uniform(0, 2 * M_PI));
        break;
      }
    }
  }
  return c;
}

}  // namespace

TEST_CASE("unitary_of on elementary circuits") {
  Circuit empty(2);
  CHECK((unitary_of(empty) - Eigen::MatrixXcd::Identity(4, 4)).norm() <
        1e-14);

  Circuit h(1);
  h.h(0);
  CHECK((unitary_of(h) - testref::h2()).norm() < 1e-14);

  Circuit ms(2);
  ms.ms(0, 1, 0.7);
  ms.ms(0, 1, -0.7);
  CHECK((unitary_of(ms) - Eigen::MatrixXcd::Identity(4, 4)).norm() < 1e-12);
}

TEST_CASE("unitary_of matches the reference matrix product") {
  Rng rng = derive_stream(21, 0);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c = random_unitary_circuit(3, 12, rng);
    CHECK((unitary_of(c) - testref::circuit_matrix(c)).norm() < 1e-11);
  }
}

TEST_CASE("unitary_of rejects non-unitary instructions") {
  Circuit c(2);
  c.reset(0);
  CHECK_THROWS_AS(unitary_of(c), std::invalid_argument);
  Circuit m(2);
  m.measure_z(0, BitInfo{BitRole::Check, -1, -1});
  CHECK_THROWS_AS(unitary_of(m), std::invalid_argument);
}

TEST_CASE("gate validation") {
  Circuit c(2);
  CHECK_THROWS_AS(c.h(2), std::out_of_range);
  CHECK_THROWS_AS(c.cnot(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.ms(1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("append re-indexes classical bits") {
  Circuit a(3);
  a.h(0);
  a.measure_z(0, BitInfo{BitRole::Check, 0, -1});
  Circuit b(3);
  b.measure_z(1, BitInfo{BitRole::Data, 1, 1});
  a.append(b);
  CHECK(a.n_bits() == 2);
  CHECK(a.instructions.back().bit == 1);
  CHECK(a.bits[1].role == BitRole::Data);
  Circuit wrong(2);
  CHECK_THROWS_AS(a.append(wrong), std::invalid_argument);
}

TEST_CASE("circuit json round-trips bit-exactly") {
  Rng rng = derive_stream(22, 0);
  Circuit c = random_unitary_circuit(4, 20, rng);
  c.kind = CircuitKind::Composite;
  c.reset(2);
  c.measure_z(2, BitInfo{BitRole::Check, 3, -1});
  c.measure_z(0, BitInfo{BitRole::Data, -1, 0});

  nlohmann::json j = c;
  Circuit back = j.get<Circuit>();
  CHECK(back == c);
  // Serialized form is stable across a round trip, including float angles.
  CHECK(nlohmann::json(back).dump() == j.dump());
}

TEST_CASE("malformed circuit documents are rejected") {
  nlohmann::json j = Circuit(2);
  j["version"] = 2;
  CHECK_THROWS_AS(j.get<Circuit>(), std::invalid_argument);
  nlohmann::json bad = Circuit(2);
  bad["gates"].push_back({{"op", "h"}, {"qubits", {5}}});
  CHECK_THROWS_AS(bad.get<Circuit>(), std::invalid_argument);
  nlohmann::json unknown = Circuit(2);
  unknown["gates"].push_back({{"op", "cz"}, {"qubits", {0, 1}}});
  CHECK_THROWS_AS(unknown.get<Circuit>(), std::invalid_argument);
}
