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

#include "iceberg/verify.hpp"

#include "doctest.h"
#include "iceberg/ft.hpp"

using namespace iceberg;

TEST_CASE("fault site enumeration counts") {
  CodeLayout lay(2);
  Circuit c(4);
  c.cnot(0, 1);
  CHECK(enumerate_fault_sites(c).size() == 15);

  Circuit c2(4);
  c2.h(0);
  c2.cnot(0, 1);
  c2.measure_z(1, BitInfo{BitRole::Check, 0, -1});
  CHECK(enumerate_fault_sites(c2).size() == 3 + 15 + 1);

  Circuit empty(4);
  FaultReport r = verify(empty, lay);
  CHECK(r.total == 0);
  CHECK(r.pass);
}

TEST_CASE("site counts of the check circuits are fixed by the template") {
  // init: (n+1) resets + one H + 15*(n+1) CNOTs + one measurement.
  // syndrome: 2 resets + 2 H + 15*2n CNOTs + 2 measurements.
  // final: 2 resets + 2 H + 15*(n+2) CNOTs + (n+2) measurements.
  for (int k : {2, 8}) {
    CodeLayout lay(k);
    int n = lay.n();
    CHECK(enumerate_fault_sites(build_init(lay)).size() ==
          static_cast<size_t>(16 * n + 20));
    CHECK(enumerate_fault_sites(build_syndrome(lay)).size() ==
          static_cast<size_t>(30 * n + 10));
    CHECK(enumerate_fault_sites(build_final(lay)).size() ==
          static_cast<size_t>(16 * n + 40));
  }
}

TEST_CASE("check circuits use only the construction gate set") {
  CodeLayout lay(6);
  for (const Circuit& c :
       {build_init(lay), build_syndrome(lay), build_final(lay)}) {
    for (const auto& instr : c.instructions) {
      bool ok = instr.op == Op::H || instr.op == Op::Cnot ||
                instr.op == Op::Reset || instr.op == Op::MeasureZ ||
                instr.op == Op::S || instr.op == Op::Sdg || instr.op == Op::X;
      CHECK(ok);
    }
  }
  // The syndrome round touches exactly the two ancillas beyond the data.
  Circuit syn = build_syndrome(lay);
  bool uses_a1 = false, uses_a2 = false;
  for (const auto& instr : syn.instructions) {
    for (int q : {instr.q0, instr.q1}) {
      if (q == lay.a1()) uses_a1 = true;
      if (q == lay.a2()) uses_a2 = true;
    }
  }
  CHECK(uses_a1);
  CHECK(uses_a2);
  // init uses a1 only.
  for (const auto& instr : build_init(lay).instructions) {
    CHECK(instr.q0 != lay.a2());
    CHECK(instr.q1 != lay.a2());
  }
}

TEST_CASE("all three check circuits are fault-tolerant for every even k up "
          "to 16") {
  for (int k = 2; k <= 16; k += 2) {
    CodeLayout lay(k);
    CAPTURE(k);
    FaultReport init = verify(build_init(lay), lay);
    FaultReport syn = verify(build_syndrome(lay), lay);
    FaultReport fin = verify(build_final(lay), lay);
    CHECK(init.pass);
    CHECK(syn.pass);
    CHECK(fin.pass);
    CHECK(init.total == 16 * lay.n() + 20);
    CHECK(syn.total == 30 * lay.n() + 10);
    CHECK(fin.total == 16 * lay.n() + 40);
    long init_sum = 0, syn_sum = 0;
    for (int d = 0; d < 2; ++d)
      for (int c = 0; c < 3; ++c) {
        init_sum += init.counts[d][c];
        syn_sum += syn.counts[d][c];
      }
    CHECK(init_sum == init.total);
    CHECK(syn_sum == syn.total);
  }
}

TEST_CASE("scrambled syndrome orderings are caught") {
  CodeLayout lay(4);
  SUBCASE("uniform block order A fails") {
    FtTemplate t;
    t.first_block = t.middle_block = t.last_block = BlockOrder::A;
    CHECK_FALSE(verify(build_syndrome(lay, t), lay).pass);
  }
  SUBCASE("uniform block order B fails") {
    FtTemplate t;
    t.first_block = t.middle_block = t.last_block = BlockOrder::B;
    CHECK_FALSE(verify(build_syndrome(lay, t), lay).pass);
  }
  SUBCASE("final extraction without the trailing flag fails") {
    FtTemplate t;
    t.final_trailing_flag = false;
    CHECK_FALSE(verify(build_final(lay, t), lay).pass);
  }
}

TEST_CASE("a data-data ZZ fault is an undetected logical error under the "
          "code-state rule") {
  // Negative control: the ladder of the init circuit leaves Z_i Z_{i+1}
  // residuals that are harmless for the prepared state but would be logical
  // errors on an arbitrary code state. Classifying the same circuit under
  // the code-state rule must therefore fail.
  CodeLayout lay(4);
  Circuit init = build_init(lay);
  CHECK(verify(init, lay).pass);
  Circuit relabeled = init;
  relabeled.kind = CircuitKind::Syndrome;
  FaultReport r = verify(relabeled, lay);
  CHECK_FALSE(r.pass);
  CHECK(r.undetected_logical() > 0);
}

TEST_CASE("classification against residual shapes") {
  CodeLayout lay(4);  // n = 6
  Circuit syn = build_syndrome(lay);
  auto [sx, sz] = stabilizers(lay);

  PropagationResult prop;
  prop.bit_flips.assign(syn.bits.size(), 0);
  prop.residual = sx;
  Classification c = classify(syn, lay, prop);
  CHECK_FALSE(c.detected);
  CHECK(c.cls == ResidualClass::NoError);

  prop.residual = PauliString::single(lay.n(), 3, Pauli::X);
  c = classify(syn, lay, prop);
  CHECK(c.cls == ResidualClass::StabilizerFlip);

  // X_t X_i commutes with both stabilizers but is a logical operator.
  PauliString xx(lay.n());
  xx.set(lay.t(), Pauli::X);
  xx.set(2, Pauli::X);
  prop.residual = xx;
  c = classify(syn, lay, prop);
  CHECK_FALSE(c.detected);
  CHECK(c.cls == ResidualClass::Logical);

  prop.bit_flips[0] = 1;
  CHECK(classify(syn, lay, prop).detected);
}

TEST_CASE("propagation flips measurement bits via anticommutation") {
  CodeLayout lay(2);
  Circuit fin = build_final(lay);
  // An X just before one data measurement flips exactly that bit, which
  // flips the reconstructed S_Z parity.
  int measure_idx = -1;
  for (int i = 0; i < static_cast<int>(fin.instructions.size()); ++i)
    if (fin.instructions[i].op == Op::MeasureZ &&
        fin.bits[fin.instructions[i].bit].role == BitRole::Data)
      measure_idx = i;
  REQUIRE(measure_idx >= 0);
  FaultSite site{measure_idx, true,
                 PauliString::single(fin.n_qubits,
                                     fin.instructions[measure_idx].q0,
                                     Pauli::X)};
  PropagationResult prop = propagate(fin, lay, site);
  int flips = 0;
  for (uint8_t f : prop.bit_flips) flips += f;
  CHECK(flips == 1);
  Classification c = classify(fin, lay, prop);
  CHECK(c.detected);
}

TEST_CASE("the template search selects the shipped construction") {
  auto found = find_ft_template(8);
  REQUIRE(found.has_value());
  CHECK(*found == FtTemplate{});
}

TEST_CASE("verification runs fast enough for the largest code size") {
  CodeLayout lay(16);
  auto t0 = std::chrono::steady_clock::now();
  CHECK(verify(build_init(lay), lay).pass);
  CHECK(verify(build_syndrome(lay), lay).pass);
  CHECK(verify(build_final(lay), lay).pass);
  auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0);
  CHECK(dt.count() < 60.0);
}
