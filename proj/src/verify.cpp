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

#include <cmath>
#include <sstream>

namespace iceberg {

const char* residual_class_name(ResidualClass c) {
  switch (c) {
    case ResidualClass::NoError: return "no_error";
    case ResidualClass::StabilizerFlip: return "stabilizer_flip";
    case ResidualClass::Logical: return "logical";
  }
  return "?";
}

namespace {

const Pauli kSingle[3] = {Pauli::X, Pauli::Y, Pauli::Z};

void require_clifford(const Instruction& instr) {
  if (instr.op == Op::Rz || instr.op == Op::Rx)
    throw std::invalid_argument("fault analysis needs a Clifford circuit");
  if (instr.op == Op::Ms) {
    double steps = instr.theta / (M_PI / 2.0);
    if (std::abs(steps - std::lround(steps)) > 1e-9)
      throw std::invalid_argument("fault analysis needs a Clifford circuit");
  }
}

}  // namespace

std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit) {
  std::vector<FaultSite> sites;
  for (int idx = 0; idx < static_cast<int>(circuit.instructions.size()); ++idx) {
    const Instruction& instr = circuit.instructions[idx];
    require_clifford(instr);
    switch (instr.op) {
      case Op::H:
      case Op::S:
      case Op::Sdg:
      case Op::X:
        for (Pauli p : kSingle)
          sites.push_back(FaultSite{
              idx, false, PauliString::single(circuit.n_qubits, instr.q0, p)});
        break;
      case Op::Cnot:
      case Op::Ms:
        for (Pauli p0 : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z})
          for (Pauli p1 : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
            if (p0 == Pauli::I && p1 == Pauli::I) continue;
            PauliString e(circuit.n_qubits);
            e.set(instr.q0, p0);
            e.set(instr.q1, p1);
            sites.push_back(FaultSite{idx, false, std::move(e)});
          }
        break;
      case Op::Reset:
        sites.push_back(FaultSite{
            idx, false,
            PauliString::single(circuit.n_qubits, instr.q0, Pauli::X)});
        break;
      case Op::MeasureZ:
        sites.push_back(FaultSite{
            idx, true,
            PauliString::single(circuit.n_qubits, instr.q0, Pauli::X)});
        break;
      default:
        break;
    }
  }
  return sites;
}

PropagationResult propagate(const Circuit& circuit, const CodeLayout& layout,
                            const FaultSite& site) {
  PropagationResult out;
  out.bit_flips.assign(circuit.bits.size(), 0);
  PauliString err = site.error;
  int start = site.instr_index + (site.before_instruction ? 0 : 1);
  for (int idx = start; idx < static_cast<int>(circuit.instructions.size());
       ++idx) {
    const Instruction& instr = circuit.instructions[idx];
    switch (instr.op) {
      case Op::MeasureZ:
        if (err.x_bit(instr.q0)) out.bit_flips[instr.bit] ^= 1;
        err.clear_qubit(instr.q0);
        break;
      case Op::Reset:
        err.clear_qubit(instr.q0);
        break;
      default:
        conjugate_through(instr, err);
        break;
    }
  }
  out.residual = err.restricted(layout.n());
  return out;
}

namespace {

struct ResidualShape {
  bool x_uniform;  // x part all zero or all one
  bool z_uniform;
  int z_weight;
};

ResidualShape shape_of(const PauliString& residual) {
  int n = residual.n_qubits();
  int xw = 0, zw = 0;
  for (int q = 0; q < n; ++q) {
    xw += residual.x_bit(q) ? 1 : 0;
    zw += residual.z_bit(q) ? 1 : 0;
  }
  return ResidualShape{xw == 0 || xw == n, zw == 0 || zw == n, zw};
}

Classification classify_code_state(const CodeLayout& layout,
                                   const PropagationResult& prop,
                                   bool ghz_rule) {
  Classification c;
  for (uint8_t f : prop.bit_flips) c.detected |= f != 0;
  ResidualShape s = shape_of(prop.residual);
  bool no_error =
      ghz_rule ? (s.x_uniform && s.z_weight % 2 == 0) : (s.x_uniform && s.z_uniform);
  if (no_error) {
    c.cls = ResidualClass::NoError;
    return c;
  }
  auto [sx, sz] = stabilizers(layout);
  if (!prop.residual.commutes_with(sx) || !prop.residual.commutes_with(sz))
    c.cls = ResidualClass::StabilizerFlip;
  else
    c.cls = ResidualClass::Logical;
  return c;
}

Classification classify_final(const Circuit& circuit, const CodeLayout& layout,
                              const PropagationResult& prop) {
  Classification c;
  std::vector<uint8_t> data_flip(layout.n(), 0);
  int sz_parity = 0;
  for (size_t bit = 0; bit < circuit.bits.size(); ++bit) {
    const BitInfo& info = circuit.bits[bit];
    if (info.role == BitRole::Check) {
      c.detected |= prop.bit_flips[bit] != 0;
    } else {
      data_flip[info.qubit] = prop.bit_flips[bit];
      sz_parity ^= prop.bit_flips[bit];
    }
  }
  c.detected |= sz_parity != 0;
  bool logical_flip = false;
  for (int i = 0; i < layout.k; ++i)
    logical_flip |= (data_flip[i] ^ data_flip[layout.b()]) != 0;
  if (logical_flip)
    c.cls = ResidualClass::Logical;
  else if (sz_parity != 0)
    c.cls = ResidualClass::StabilizerFlip;
  else
    c.cls = ResidualClass::NoError;
  return c;
}

}  // namespace

Classification classify(const Circuit& circuit, const CodeLayout& layout,
                        const PropagationResult& prop) {
  switch (circuit.kind) {
    case CircuitKind::Init:
      return classify_code_state(layout, prop, /*ghz_rule=*/true);
    case CircuitKind::Final:
      return classify_final(circuit, layout, prop);
    default:
      return classify_code_state(layout, prop, /*ghz_rule=*/false);
  }
}

FaultReport verify(const Circuit& circuit, const CodeLayout& layout,
                   bool keep_records) {
  FaultReport report;
  std::vector<FaultSite> sites = enumerate_fault_sites(circuit);
  report.total = static_cast<long>(sites.size());
  for (FaultSite& site : sites) {
    PropagationResult prop = propagate(circuit, layout, site);
    Classification cls = classify(circuit, layout, prop);
    report.counts[cls.detected ? 1 : 0][static_cast<int>(cls.cls)] += 1;
    if (keep_records) report.records.push_back({std::move(site), cls});
  }
  report.pass = report.undetected_logical() == 0;
  return report;
}

std::string format_fault_table(const FaultReport& report) {
  std::ostringstream os;
  os << "              no_error  stab_flip    logical\n";
  const char* rows[2] = {"undetected", "detected  "};
  for (int d = 1; d >= 0; --d) {
    os << rows[d];
    for (int c = 0; c < 3; ++c) {
      os.width(11);
      os << report.counts[d][c];
    }
    os << "\n";
  }
  os << "total " << report.total << ", undetected logical "
     << report.undetected_logical() << " -> "
     << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace iceberg
