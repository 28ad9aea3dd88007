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

#pragma once

#include <complex>
#include <nlohmann/json.hpp>
#include <vector>

#include "iceberg/circuit.hpp"
#include "iceberg/code.hpp"
#include "iceberg/ft.hpp"

namespace iceberg {

/// One logical rotation exp(-i angle * (sign * generator) / 2).
struct LogicalRotation {
  LogicalPauli generator;
  double angle = 0.0;
  int layer = -1;  // construction layer, used by syndrome placement policies

  bool operator==(const LogicalRotation&) const = default;
};

struct LogicalCircuit {
  int k = 0;
  std::vector<LogicalRotation> rotations;

  bool operator==(const LogicalCircuit&) const = default;
};

void to_json(nlohmann::json& j, const LogicalCircuit& c);
void from_json(const nlohmann::json& j, LogicalCircuit& c);

/// Where syndrome measurement rounds go when a logical circuit is encoded.
struct SyndromePolicy {
  enum class Kind : uint8_t { None, Rounds, EveryLayers };
  Kind kind = Kind::None;
  int value = 0;

  static SyndromePolicy none() { return {}; }
  /// r rounds between equally sized chunks of the instruction list.
  static SyndromePolicy rounds(int r) { return {Kind::Rounds, r}; }
  /// One round after every l construction layers.
  static SyndromePolicy every_layers(int l) { return {Kind::EveryLayers, l}; }

  bool operator==(const SyndromePolicy&) const = default;
};

/// Appends exp(-i theta sigma_i sigma_j / 2): one MS gate dressed with the
/// basis change that maps Z to the rotation basis on each qubit.
void append_pair_rotation(Circuit& c, Pauli basis, int i, int j,
                          double theta);

Circuit compile_pair_rotation(int n_qubits, Pauli basis, int i, int j,
                              double theta, int sign = 1);

/// Appends exp(-i theta P / 2) for an arbitrary Pauli string P: a CNOT
/// parity ladder onto the next-to-last support qubit, one MS gate on the
/// last pair, and the inverse ladder. Weight-1 generators become plain
/// single-qubit rotations, weight-2 a single dressed MS.
void append_phase_gadget(Circuit& c, const PauliString& generator,
                         double theta);

Circuit compile_phase_gadget(int n_qubits, const PauliString& generator,
                             double theta);

struct AxisAngle {
  Op axis;  // Op::Rz or Op::Rx
  double angle;

  bool operator==(const AxisAngle&) const = default;
};

struct SquashedRun {
  std::vector<AxisAngle> gates;  // at most Rz, Rx, Rz
  std::complex<double> phase;    // product(inputs) == phase * product(gates)
};

/// Collapses a run of Z/X-axis rotations into at most a Z-X-Z triple.
SquashedRun squash_axis_angles(const std::vector<AxisAngle>& run);

/// Squashes adjacent single-qubit rotations per qubit across the circuit
/// (global phases are dropped; they are unobservable in the experiments).
LogicalCircuit squash_1q(const LogicalCircuit& lc);

/// Removes single-qubit Z rotations that act directly after initialisation
/// or directly before the computational-basis measurement.
LogicalCircuit strip_boundary_z(const LogicalCircuit& lc);

/// Lowers a logical circuit onto k bare qubits: resets, rotation gadgets,
/// and a final measurement of every qubit.
Circuit lower_unencoded(const LogicalCircuit& lc);

/// The rotation gadgets alone (no resets or measurements); useful for exact
/// matrix checks and for computing ideal output distributions.
Circuit lower_unencoded_body(const LogicalCircuit& lc);

/// Encodes a logical circuit: initialisation, instruction chunks with
/// syndrome rounds per policy, and the final measurement block. Every
/// rotation must be two-qubit compilable. Chunk boundaries never split one
/// compiled logical gate.
Circuit encode_logical_circuit(const LogicalCircuit& lc,
                               const CodeLayout& layout,
                               const SyndromePolicy& policy,
                               const FtTemplate& tmpl = {});

/// Positions (indices into the unit sequence) where syndrome rounds are
/// inserted. Each unit is one atomic compiled gate, described by its
/// physical gate count and construction layer.
std::vector<size_t> syndrome_cut_points(
    const std::vector<std::pair<int, int>>& units,
    const SyndromePolicy& policy);

/// Z-X-Z Euler angles of a single-qubit unitary:
/// u == phase * Rz(z_last) * Rx(x) * Rz(z_first).
struct ZxzAngles {
  double z_first;
  double x;
  double z_last;
  std::complex<double> phase;
};

ZxzAngles zxz_decompose(const Eigen::Matrix2cd& u);

}  // namespace iceberg
