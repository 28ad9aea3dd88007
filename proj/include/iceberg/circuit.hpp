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

#include <Eigen/Dense>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "iceberg/pauli.hpp"

namespace iceberg {

enum class Op : uint8_t { H, S, Sdg, X, Cnot, Ms, Rz, Rx, Reset, MeasureZ };

const char* op_name(Op op);
Op op_from_name(const std::string& name);
bool op_is_two_qubit(Op op);
bool op_is_single_qubit_gate(Op op);

struct Instruction {
  Op op;
  int q0 = -1;
  int q1 = -1;        // second qubit for Cnot/Ms
  double theta = 0.0; // Ms/Rz/Rx
  int bit = -1;       // MeasureZ target bit

  bool operator==(const Instruction&) const = default;
};

enum class BitRole : uint8_t { Check, Data };

/// Classical bit bookkeeping. Check bits must read 0 for a run to be
/// accepted; data bits carry the destructive readout of one data qubit.
struct BitInfo {
  BitRole role = BitRole::Check;
  int round = -1;  // syndrome round id; -1 outside any round
  int qubit = -1;  // measured data qubit, for Data bits

  bool operator==(const BitInfo&) const = default;
};

enum class CircuitKind : uint8_t { Generic, Init, Syndrome, Final, Composite };

const char* circuit_kind_name(CircuitKind k);
CircuitKind circuit_kind_from_name(const std::string& name);

/// Ordered instruction list over the construction gate set. Instruction
/// order is significant and preserved everywhere.
struct Circuit {
  int n_qubits = 0;
  std::vector<Instruction> instructions;
  std::vector<BitInfo> bits;
  CircuitKind kind = CircuitKind::Generic;

  Circuit() = default;
  explicit Circuit(int n) : n_qubits(n) {}

  int n_bits() const { return static_cast<int>(bits.size()); }

  void h(int q) { push1(Op::H, q); }
  void s(int q) { push1(Op::S, q); }
  void sdg(int q) { push1(Op::Sdg, q); }
  void x(int q) { push1(Op::X, q); }
  void rz(int q, double theta) { push1(Op::Rz, q, theta); }
  void rx(int q, double theta) { push1(Op::Rx, q, theta); }
  void reset(int q) { push1(Op::Reset, q); }
  void cnot(int control, int target);
  void ms(int a, int b, double theta);
  int measure_z(int q, BitInfo info);

  /// Appends another circuit over the same qubit space; its classical bits
  /// are re-indexed onto the end of this circuit's register.
  void append(const Circuit& other);

  int count_op(Op op) const;
  int count_two_qubit() const;

  bool operator==(const Circuit&) const = default;

 private:
  void push1(Op op, int q, double theta = 0.0);
  void check_qubit(int q) const;
};

void to_json(nlohmann::json& j, const Circuit& c);
void from_json(const nlohmann::json& j, Circuit& c);

/// Conjugates p through one instruction: p <- U p U^dagger. Only Clifford
/// instructions are accepted; Reset/MeasureZ are rejected here (the fault
/// propagation code handles those itself).
void conjugate_through(const Instruction& instr, PauliString& p);

/// Exact unitary of a measurement-free circuit. Basis states are indexed
/// with qubit 0 as the least significant bit. Intended for small circuits.
Eigen::MatrixXcd unitary_of(const Circuit& c);

}  // namespace iceberg
