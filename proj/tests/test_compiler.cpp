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

#include "iceberg/compile.hpp"

#include "doctest.h"
#include "iceberg/kak.hpp"
#include "iceberg/random_matrix.hpp"
#include "iceberg/rng.hpp"
#include "test_matrices.hpp"

using namespace iceberg;

namespace {

Eigen::MatrixXcd kron_hi_lo(const Eigen::Matrix2cd& hi,
                            const Eigen::Matrix2cd& lo) {
  Eigen::MatrixXcd out(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out(r, c) = hi(r >> 1, c >> 1) * lo(r & 1, c & 1);
  return out;
}

PauliString pair_string(int n, Pauli basis, int i, int j) {
  PauliString p(n);
  p.set(i, basis);
  p.set(j, basis);
  return p;
}

}  // namespace

TEST_CASE("pair rotations compile to one dressed MS gate") {
  Rng rng = derive_stream(51, 0);
  for (Pauli basis : {Pauli::X, Pauli::Y, Pauli::Z}) {
    for (int trial = 0; trial < 25; ++trial) {
      double theta = rng.uniform(0, 2 * M_PI);
      int sign = rng.bernoulli(0.5) ? 1 : -1;
      Circuit c = compile_pair_rotation(3, basis, 0, 2, theta, sign);
      CHECK(c.count_op(Op::Ms) == 1);
      Eigen::MatrixXcd expected = testref::pauli_rotation_matrix(
          pair_string(3, basis, 0, 2), sign * theta);
      CHECK((unitary_of(c) - expected).norm() < 1e-12);
    }
  }
  // The X-basis pair uses exactly four Hadamard dressings.
  Circuit xtb = compile_pair_rotation(4, Pauli::X, 2, 3, 0.8);
  CHECK(xtb.count_op(Op::H) == 4);
  CHECK(xtb.instructions.size() == 5);
  // The Z-basis pair is a bare MS gate.
  Circuit zij = compile_pair_rotation(4, Pauli::Z, 0, 1, 0.8);
  CHECK(zij.instructions.size() == 1);
  CHECK(zij.instructions[0].op == Op::Ms);
}

TEST_CASE("a negative-signed Y pair rotation realizes the inverse angle") {
  double theta = 1.234;
  Circuit c = compile_pair_rotation(2, Pauli::Y, 0, 1, theta, -1);
  Eigen::MatrixXcd expected =
      testref::pauli_rotation_matrix(PauliString::parse("YY"), -theta);
  CHECK((unitary_of(c) - expected).norm() < 1e-12);
}

TEST_CASE("phase gadgets realize the exact Pauli exponential") {
  SUBCASE("global X generator uses a ladder with an MS kernel") {
    PauliString gen = PauliString::parse("XXXX");
    Circuit c = compile_phase_gadget(4, gen, 0.9);
    CHECK(c.count_op(Op::H) == 8);
    CHECK(c.count_op(Op::Cnot) == 4);
    CHECK(c.count_op(Op::Ms) == 1);
    CHECK((unitary_of(c) - testref::pauli_rotation_matrix(gen, 0.9)).norm() <
          1e-12);
  }
  SUBCASE("weight-two Z generator is a bare MS") {
    Circuit c = compile_phase_gadget(2, PauliString::parse("ZZ"), 0.4);
    CHECK(c.instructions.size() == 1);
    CHECK((unitary_of(c) -
           testref::pauli_rotation_matrix(PauliString::parse("ZZ"), 0.4))
              .norm() < 1e-13);
  }
  SUBCASE("mixed-basis generator") {
    PauliString gen = PauliString::parse("YXZ");
    Circuit c = compile_phase_gadget(3, gen, 2.1);
    CHECK((unitary_of(c) - testref::pauli_rotation_matrix(gen, 2.1)).norm() <
          1e-12);
  }
  SUBCASE("weight-one generators become plain rotations") {
    Circuit c = compile_phase_gadget(2, PauliString::parse("IZ"), 0.7);
    CHECK(c.count_two_qubit() == 0);
    CHECK((unitary_of(c) -
           testref::pauli_rotation_matrix(PauliString::parse("IZ"), 0.7))
              .norm() < 1e-12);
  }
  SUBCASE("random generators") {
    Rng rng = derive_stream(52, 0);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 2 + static_cast<int>(rng.below(3));
      PauliString gen(n);
      while (gen.weight() == 0)
        for (int q = 0; q < n; ++q)
          gen.set(q, static_cast<Pauli>(rng.below(4)));
      double theta = rng.uniform(0, 2 * M_PI);
      Circuit c = compile_phase_gadget(n, gen, theta);
      CHECK((unitary_of(c) - testref::pauli_rotation_matrix(gen, theta))
                .norm() < 1e-11);
    }
  }
  CHECK_THROWS_AS(compile_phase_gadget(2, PauliString(2), 1.0),
                  std::invalid_argument);
}

namespace {

Eigen::Matrix2cd product_of(const std::vector<AxisAngle>& gates) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  for (const AxisAngle& g : gates) {
    Instruction i{g.axis, 0, -1, g.angle, -1};
    m = testref::instruction_matrix(1, i) * m;
  }
  return m;
}

}  // namespace

TEST_CASE("axis-angle squashing produces an equivalent Z-X-Z triple") {
  SUBCASE("six rotations collapse to at most three") {
    std::vector<AxisAngle> run = {{Op::Rz, 0.3}, {Op::Rx, 1.1}, {Op::Rz, -0.4},
                                  {Op::Rz, 0.9}, {Op::Rx, 0.2}, {Op::Rz, 2.5}};
    SquashedRun s = squash_axis_angles(run);
    CHECK(s.gates.size() <= 3);
    CHECK((product_of(run) - s.phase * product_of(s.gates)).norm() < 1e-12);
  }
  SUBCASE("a single rotation is unchanged") {
    SquashedRun s = squash_axis_angles({{Op::Rz, 0.7}});
    REQUIRE(s.gates.size() == 1);
    CHECK(s.gates[0].axis == Op::Rz);
    CHECK(s.gates[0].angle == doctest::Approx(0.7));
  }
  SUBCASE("two half turns cancel up to a phase") {
    SquashedRun s = squash_axis_angles({{Op::Rx, M_PI}, {Op::Rx, M_PI}});
    CHECK(s.gates.empty());
    CHECK(std::abs(s.phase - std::complex<double>(-1, 0)) < 1e-12);
  }
  SUBCASE("random runs") {
    Rng rng = derive_stream(53, 0);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<AxisAngle> run;
      int len = 1 + static_cast<int>(rng.below(8));
      for (int g = 0; g < len; ++g)
        run.push_back({rng.bernoulli(0.5) ? Op::Rz : Op::Rx,
                       rng.uniform(-2 * M_PI, 2 * M_PI)});
      SquashedRun s = squash_axis_angles(run);
      CHECK(s.gates.size() <= 3);
      CHECK((product_of(run) - s.phase * product_of(s.gates)).norm() < 1e-12);
    }
  }
}

namespace {

LogicalRotation rot1(int k, int q, Pauli p, double angle, int layer = -1) {
  LogicalRotation r;
  r.generator.op = PauliString::single(k, q, p);
  r.angle = angle;
  r.layer = layer;
  return r;
}

LogicalRotation rot2(int k, int a, int b, Pauli p, double angle,
                     int layer = -1) {
  LogicalRotation r;
  r.generator.op = pair_string(k, p, a, b);
  r.angle = angle;
  r.layer = layer;
  return r;
}

// Probability distribution of the measurement-free lowering from |0...0>.
std::vector<double> output_distribution(const LogicalCircuit& lc) {
  Eigen::MatrixXcd u = unitary_of(lower_unencoded_body(lc));
  std::vector<double> p(static_cast<size_t>(u.rows()));
  for (Eigen::Index r = 0; r < u.rows(); ++r) p[r] = std::norm(u(r, 0));
  return p;
}

}  // namespace

TEST_CASE("single-qubit squashing preserves the circuit unitary") {
  LogicalCircuit lc;
  lc.k = 4;
  lc.rotations = {rot1(4, 0, Pauli::Z, 0.3),  rot1(4, 0, Pauli::X, 0.8),
                  rot1(4, 0, Pauli::Z, -0.2), rot1(4, 1, Pauli::X, 0.5),
                  rot2(4, 0, 1, Pauli::Z, 0.9), rot1(4, 0, Pauli::Z, 0.4),
                  rot1(4, 0, Pauli::X, 1.3),  rot1(4, 0, Pauli::Z, 0.6),
                  rot1(4, 2, Pauli::Z, 1.1),  rot1(4, 2, Pauli::Z, -1.1)};
  LogicalCircuit squashed = squash_1q(lc);
  CHECK(squashed.rotations.size() < lc.rotations.size());
  Eigen::MatrixXcd a = unitary_of(lower_unencoded_body(lc));
  Eigen::MatrixXcd b = unitary_of(lower_unencoded_body(squashed));
  // Equal up to the dropped global phase.
  Eigen::Index rmax = 0, cmax = 0;
  a.cwiseAbs().maxCoeff(&rmax, &cmax);
  std::complex<double> ratio = a(rmax, cmax) / b(rmax, cmax);
  CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-10);
  CHECK((a - ratio * b).norm() < 1e-10);
}

TEST_CASE("boundary Z rotations are stripped without changing the readout "
          "distribution") {
  LogicalCircuit lc;
  lc.k = 3;
  lc.rotations = {rot1(3, 0, Pauli::Z, 0.4),   // removable: right after init
                  rot1(3, 1, Pauli::X, 0.9),   // kept
                  rot1(3, 1, Pauli::Z, 0.2),   // kept: between gates
                  rot2(3, 0, 1, Pauli::Y, 1.0),
                  rot1(3, 2, Pauli::Z, -0.7),  // removable: leading and trailing
                  rot1(3, 1, Pauli::Z, 0.5)};  // removable: before measurement
  LogicalCircuit stripped = strip_boundary_z(lc);
  CHECK(stripped.rotations.size() == 3);
  // An Rx after initialisation stays.
  bool has_rx = false;
  for (const auto& r : stripped.rotations)
    has_rx |= r.generator.op.str() == "+IXI";
  CHECK(has_rx);

  std::vector<double> before = output_distribution(lc);
  std::vector<double> after = output_distribution(stripped);
  for (size_t i = 0; i < before.size(); ++i)
    CHECK(before[i] == doctest::Approx(after[i]).epsilon(1e-12));
}

TEST_CASE("zxz decomposition reproduces random single-qubit unitaries") {
  Rng rng = derive_stream(54, 0);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Matrix2cd u = haar_unitary(2, rng);
    ZxzAngles a = zxz_decompose(u);
    Eigen::Matrix2cd rec =
        a.phase * testref::instruction_matrix(
                      1, Instruction{Op::Rz, 0, -1, a.z_last, -1}) *
        testref::instruction_matrix(1, Instruction{Op::Rx, 0, -1, a.x, -1}) *
        testref::instruction_matrix(1, Instruction{Op::Rz, 0, -1, a.z_first, -1});
    CHECK((rec - u).norm() < 1e-10);
  }
}

TEST_CASE("kak decomposition") {
  SUBCASE("identity") {
    KakDecomposition d = kak_decompose(Eigen::Matrix4cd::Identity());
    CHECK(d.xx == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.yy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.zz == doctest::Approx(0.0).epsilon(1e-12));
    CHECK((kak_recompose(d) - Eigen::Matrix4cd::Identity()).norm() < 1e-10);
  }
  SUBCASE("a ZZ rotation is already in normal form") {
    double theta = 0.3;
    Eigen::Matrix4cd u = canonical_interaction(0, 0, theta);
    KakDecomposition d = kak_decompose(u);
    CHECK(d.xx == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.yy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(d.zz == doctest::Approx(theta).epsilon(1e-12));
    // Locals are identity up to phase.
    CHECK(std::abs(std::abs(d.hi_post(0, 0)) - 1.0) < 1e-9);
    CHECK(std::abs(d.hi_post(0, 1)) < 1e-9);
    CHECK(std::abs(d.lo_post(0, 1)) < 1e-9);
    CHECK(std::abs(d.hi_pre(0, 1)) < 1e-9);
    CHECK(std::abs(d.lo_pre(0, 1)) < 1e-9);
    CHECK((kak_recompose(d) - u).norm() < 1e-10);
  }
  SUBCASE("cnot is equivalent to a half-turn interaction on one axis") {
    Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
    // Control on the low qubit (index bit 0), target on the high qubit.
    cnot(0, 0) = 1;
    cnot(2, 2) = 1;
    cnot(1, 3) = 1;
    cnot(3, 1) = 1;
    KakDecomposition d = kak_decompose(cnot);
    CHECK((kak_recompose(d) - cnot).norm() < 1e-9);
    KakDecomposition ref = kak_decompose(canonical_interaction(M_PI / 2, 0, 0));
    CHECK(d.xx == doctest::Approx(ref.xx).epsilon(1e-9));
    CHECK(d.yy == doctest::Approx(ref.yy).epsilon(1e-9));
    CHECK(d.zz == doctest::Approx(ref.zz).epsilon(1e-9));
  }
  SUBCASE("random unitaries recompose within tolerance") {
    Rng rng = derive_stream(55, 0);
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Matrix4cd u = haar_unitary(4, rng);
      KakDecomposition d = kak_decompose(u);
      CHECK((kak_recompose(d) - u).norm() < 1e-9);
      CHECK(std::abs(d.xx) <= d.yy + 1e-12);
      CHECK(d.yy <= d.zz + 1e-12);
      CHECK(d.zz <= M_PI / 2 + 1e-12);
    }
  }
  SUBCASE("interaction angles are idempotent under re-decomposition") {
    Rng rng = derive_stream(56, 0);
    for (int trial = 0; trial < 50; ++trial) {
      Eigen::Matrix4cd u = haar_unitary(4, rng);
      KakDecomposition d = kak_decompose(u);
      KakDecomposition d2 = kak_decompose(kak_recompose(d));
      CHECK(d2.xx == doctest::Approx(d.xx).epsilon(1e-9));
      CHECK(d2.yy == doctest::Approx(d.yy).epsilon(1e-9));
      CHECK(d2.zz == doctest::Approx(d.zz).epsilon(1e-9));
    }
  }
  SUBCASE("non-unitary input is rejected") {
    Eigen::Matrix4cd bad = Eigen::Matrix4cd::Identity() * 1.5;
    CHECK_THROWS_AS(kak_decompose(bad), std::invalid_argument);
  }
}

TEST_CASE("tensor factorization recovers local factors") {
  Rng rng = derive_stream(57, 0);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::Matrix2cd hi = haar_unitary(2, rng);
    Eigen::Matrix2cd lo = haar_unitary(2, rng);
    Eigen::Matrix4cd m = kron_hi_lo(hi, lo);
    Eigen::Matrix2cd fh, fl;
    std::complex<double> ph;
    factor_tensor_product(m, &fh, &fl, &ph);
    CHECK((ph * kron_hi_lo(fh, fl) - m).norm() < 1e-10);
  }
  Eigen::Matrix4cd cnot = Eigen::Matrix4cd::Zero();
  cnot(0, 0) = cnot(1, 1) = 1;
  cnot(2, 3) = cnot(3, 2) = 1;
  Eigen::Matrix2cd fh, fl;
  std::complex<double> ph;
  CHECK_THROWS_AS(factor_tensor_product(cnot, &fh, &fl, &ph),
                  std::runtime_error);
}

TEST_CASE("encoding a logical circuit") {
  CodeLayout lay(2);
  SUBCASE("an empty circuit encodes to init plus final") {
    LogicalCircuit lc;
    lc.k = 2;
    Circuit c = encode_logical_circuit(lc, lay, SyndromePolicy::none());
    Circuit expected = build_init(lay, FtTemplate{}, 0);
    expected.kind = CircuitKind::Composite;
    expected.append(build_final(lay, FtTemplate{}, 1));
    CHECK(c == expected);
  }
  SUBCASE("round placement by chunk count") {
    LogicalCircuit lc;
    lc.k = 2;
    for (int i = 0; i < 6; ++i)
      lc.rotations.push_back(rot2(2, 0, 1, Pauli::Z, 0.1 * (i + 1)));
    Circuit c = encode_logical_circuit(lc, lay, SyndromePolicy::rounds(2));
    int syndrome_rounds = 0;
    for (const auto& b : c.bits) syndrome_rounds = std::max(syndrome_rounds, b.round);
    CHECK(syndrome_rounds == 3);  // init=0, two mid rounds, final=3
    // Chunks are balanced: the mid rounds split six identical gates 2/2/2.
    std::vector<int> ms_between;
    int ms_count = 0;
    for (const auto& instr : c.instructions) {
      if (instr.op == Op::Ms) ++ms_count;
      if (instr.op == Op::Reset && ms_count > 0) {
        ms_between.push_back(ms_count);
        ms_count = 0;
      }
    }
    if (ms_count > 0) ms_between.push_back(ms_count);
    CHECK(ms_between == std::vector<int>{2, 2, 2});
  }
  SUBCASE("layer-based placement") {
    LogicalCircuit lc;
    lc.k = 2;
    for (int layer = 0; layer < 4; ++layer)
      lc.rotations.push_back(rot2(2, 0, 1, Pauli::X, 0.2, layer));
    Circuit c =
        encode_logical_circuit(lc, lay, SyndromePolicy::every_layers(2));
    int max_round = 0;
    for (const auto& b : c.bits) max_round = std::max(max_round, b.round);
    CHECK(max_round == 2);  // one mid round between layers 1 and 2
  }
  SUBCASE("uncompilable rotations are rejected") {
    LogicalCircuit lc;
    lc.k = 4;
    LogicalRotation bad;
    bad.generator.op = PauliString::parse("XZII");
    bad.angle = 0.5;
    lc.rotations.push_back(bad);
    CHECK_THROWS_AS(
        encode_logical_circuit(lc, CodeLayout(4), SyndromePolicy::none()),
        NotCompilableError);
  }
  SUBCASE("the encoded register always has k + 4 qubits") {
    for (int k : {2, 4, 6}) {
      LogicalCircuit lc;
      lc.k = k;
      lc.rotations.push_back(rot1(k, 0, Pauli::X, 0.3));
      Circuit c = encode_logical_circuit(lc, CodeLayout(k),
                                         SyndromePolicy::rounds(1));
      CHECK(c.n_qubits == k + 4);
    }
  }
}

TEST_CASE("encoded bodies act on code states exactly as the logical "
          "rotations act on the bare register") {
  CodeLayout lay(2);
  Eigen::MatrixXcd e = encoding_isometry(lay);
  Rng rng = derive_stream(58, 0);
  for (int trial = 0; trial < 60; ++trial) {
    // A random short program of compilable rotations.
    LogicalCircuit lc;
    lc.k = 2;
    int len = 1 + static_cast<int>(rng.below(4));
    Eigen::MatrixXcd logical = Eigen::MatrixXcd::Identity(4, 4);
    Circuit phys(lay.n());
    for (int g = 0; g < len; ++g) {
      int i = static_cast<int>(rng.below(4));
      int j = static_cast<int>(rng.below(3));
      if (j >= i) ++j;
      Pauli basis = static_cast<Pauli>(1 + rng.below(3));
      double theta = rng.uniform(0, 2 * M_PI);
      LogicalPauli L = logical_from_physical_pair(lay, basis, i, j);
      LogicalRotation r{L, theta, -1};
      PhysicalPair pair = physical_from_logical(lay, r.generator);
      append_pair_rotation(phys, pair.basis, pair.i, pair.j,
                           r.angle * pair.sign);
      logical = testref::pauli_rotation_matrix(L.op, theta * L.sign) * logical;
    }
    Eigen::MatrixXcd u_phys = unitary_of(phys);
    CHECK((u_phys * e - e * logical).norm() < 1e-9);
  }
}
