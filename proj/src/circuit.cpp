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

#include <stdexcept>

namespace iceberg {

const char* op_name(Op op) {
  switch (op) {
    case Op::H: return "h";
    case Op::S: return "s";
    case Op::Sdg: return "sdg";
    case Op::X: return "x";
    case Op::Cnot: return "cnot";
    case Op::Ms: return "ms";
    case Op::Rz: return "rz";
    case Op::Rx: return "rx";
    case Op::Reset: return "reset";
    case Op::MeasureZ: return "measure_z";
  }
  return "?";
}

Op op_from_name(const std::string& name) {
  if (name == "h") return Op::H;
  if (name == "s") return Op::S;
  if (name == "sdg") return Op::Sdg;
  if (name == "x") return Op::X;
  if (name == "cnot") return Op::Cnot;
  if (name == "ms") return Op::Ms;
  if (name == "rz") return Op::Rz;
  if (name == "rx") return Op::Rx;
  if (name == "reset") return Op::Reset;
  if (name == "measure_z") return Op::MeasureZ;
  throw std::invalid_argument("unknown opcode: " + name);
}

bool op_is_two_qubit(Op op) { return op == Op::Cnot || op == Op::Ms; }

bool op_is_single_qubit_gate(Op op) {
  return op == Op::H || op == Op::S || op == Op::Sdg || op == Op::X ||
         op == Op::Rz || op == Op::Rx;
}

const char* circuit_kind_name(CircuitKind k) {
  switch (k) {
    case CircuitKind::Generic: return "generic";
    case CircuitKind::Init: return "init";
    case CircuitKind::Syndrome: return "syndrome";
    case CircuitKind::Final: return "final";
    case CircuitKind::Composite: return "composite";
  }
  return "?";
}

CircuitKind circuit_kind_from_name(const std::string& name) {
  if (name == "generic") return CircuitKind::Generic;
  if (name == "init") return CircuitKind::Init;
  if (name == "syndrome") return CircuitKind::Syndrome;
  if (name == "final") return CircuitKind::Final;
  if (name == "composite") return CircuitKind::Composite;
  throw std::invalid_argument("unknown circuit kind: " + name);
}

void Circuit::check_qubit(int q) const {
  if (q < 0 || q >= n_qubits)
    throw std::out_of_range("gate qubit out of range");
}

void Circuit::push1(Op op, int q, double theta) {
  check_qubit(q);
  instructions.push_back(Instruction{op, q, -1, theta, -1});
}

void Circuit::cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target)
    throw std::invalid_argument("CNOT qubits must be distinct");
  instructions.push_back(Instruction{Op::Cnot, control, target, 0.0, -1});
}

void Circuit::ms(int a, int b, double theta) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("MS qubits must be distinct");
  instructions.push_back(Instruction{Op::Ms, a, b, theta, -1});
}

int Circuit::measure_z(int q, BitInfo info) {
  check_qubit(q);
  int bit = n_bits();
  bits.push_back(info);
  instructions.push_back(Instruction{Op::MeasureZ, q, -1, 0.0, bit});
  return bit;
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits != n_qubits)
    throw std::invalid_argument("appending circuit with different qubit count");
  int offset = n_bits();
  bits.insert(bits.end(), other.bits.begin(), other.bits.end());
  instructions.reserve(instructions.size() + other.instructions.size());
  for (Instruction instr : other.instructions) {
    if (instr.op == Op::MeasureZ) instr.bit += offset;
    instructions.push_back(instr);
  }
}

int Circuit::count_op(Op op) const {
  int n = 0;
  for (const auto& i : instructions) n += i.op == op;
  return n;
}

int Circuit::count_two_qubit() const {
  int n = 0;
  for (const auto& i : instructions) n += op_is_two_qubit(i.op);
  return n;
}

void to_json(nlohmann::json& j, const Circuit& c) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& i : c.instructions) {
    nlohmann::json g;
    g["op"] = op_name(i.op);
    if (op_is_two_qubit(i.op))
      g["qubits"] = {i.q0, i.q1};
    else
      g["qubits"] = {i.q0};
    if (i.op == Op::Ms || i.op == Op::Rz || i.op == Op::Rx)
      g["theta"] = i.theta;
    if (i.op == Op::MeasureZ) g["bit"] = i.bit;
    gates.push_back(std::move(g));
  }
  nlohmann::json bits = nlohmann::json::array();
  for (const auto& b : c.bits) {
    nlohmann::json e;
    e["role"] = b.role == BitRole::Check ? "check" : "data";
    e["round"] = b.round;
    if (b.role == BitRole::Data) e["qubit"] = b.qubit;
    bits.push_back(std::move(e));
  }
  j = nlohmann::json{{"format", "iceberg-circuit"},
                     {"version", 1},
                     {"kind", circuit_kind_name(c.kind)},
                     {"n_qubits", c.n_qubits},
                     {"gates", std::move(gates)},
                     {"bits", std::move(bits)}};
}

void from_json(const nlohmann::json& j, Circuit& c) {
  if (j.value("format", "") != "iceberg-circuit")
    throw std::invalid_argument("not an iceberg-circuit document");
  if (j.value("version", 0) != 1)
    throw std::invalid_argument("unsupported circuit schema version");
  c = Circuit(j.at("n_qubits").get<int>());
  c.kind = circuit_kind_from_name(j.value("kind", "generic"));
  for (const auto& e : j.at("bits")) {
    BitInfo b;
    b.role = e.at("role").get<std::string>() == "data" ? BitRole::Data
                                                       : BitRole::Check;
    b.round = e.value("round", -1);
    b.qubit = e.value("qubit", -1);
    c.bits.push_back(b);
  }
  for (const auto& g : j.at("gates")) {
    Instruction i;
    i.op = op_from_name(g.at("op").get<std::string>());
    const auto& qs = g.at("qubits");
    i.q0 = qs.at(0).get<int>();
    if (op_is_two_qubit(i.op)) i.q1 = qs.at(1).get<int>();
    i.theta = g.value("theta", 0.0);
    i.bit = g.value("bit", -1);
    if (i.q0 < 0 || i.q0 >= c.n_qubits ||
        (op_is_two_qubit(i.op) && (i.q1 < 0 || i.q1 >= c.n_qubits)))
      throw std::invalid_argument("gate qubit out of range in document");
    if (i.op == Op::MeasureZ && (i.bit < 0 || i.bit >= c.n_bits()))
      throw std::invalid_argument("measurement bit out of range in document");
    c.instructions.push_back(i);
  }
}

void conjugate_through(const Instruction& instr, PauliString& p) {
  switch (instr.op) {
    case Op::H: p.conj_h(instr.q0); return;
    case Op::S: p.conj_s(instr.q0); return;
    case Op::Sdg: p.conj_sdg(instr.q0); return;
    case Op::X: p.conj_x(instr.q0); return;
    case Op::Cnot: p.conj_cnot(instr.q0, instr.q1); return;
    case Op::Ms: p.conj_ms(instr.q0, instr.q1, instr.theta); return;
    default:
      throw std::invalid_argument(
          "conjugation is only defined for unitary Clifford instructions");
  }
}

}  // namespace iceberg
