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

#include <array>
#include <string>
#include <vector>

#include "iceberg/circuit.hpp"
#include "iceberg/code.hpp"

namespace iceberg {

/// One local error: a Pauli inserted after a gate (or before a measurement,
/// for readout faults).
struct FaultSite {
  int instr_index = 0;
  bool before_instruction = false;
  PauliString error;  // acts on the full qubit register
};

enum class ResidualClass : uint8_t { NoError = 0, StabilizerFlip = 1, Logical = 2 };

const char* residual_class_name(ResidualClass c);

struct PropagationResult {
  std::vector<uint8_t> bit_flips;  // one entry per classical bit
  PauliString residual;            // on data qubits, at the end of the circuit
};

struct Classification {
  bool detected = false;
  ResidualClass cls = ResidualClass::NoError;
};

struct FaultRecord {
  FaultSite site;
  Classification outcome;
};

/// Fault census over the full single-fault set, bucketed the way the
/// verification tables are reported: detected/undetected crossed with the
/// residual class. The circuit is fault-tolerant when no undetected fault
/// leaves a logical error.
struct FaultReport {
  std::array<std::array<long, 3>, 2> counts{};  // [detected][class]
  std::vector<FaultRecord> records;
  long total = 0;
  bool pass = false;

  long undetected_logical() const {
    return counts[0][static_cast<int>(ResidualClass::Logical)];
  }
};

/// Enumerates the complete single-fault set: all 15 two-qubit Paulis after
/// each CNOT/MS, all 3 Paulis after each single-qubit gate, X after each
/// Reset, and X before each measurement.
std::vector<FaultSite> enumerate_fault_sites(const Circuit& circuit);

/// Conjugates the injected Pauli through every later instruction. A
/// measurement flips its bit when the propagated error anticommutes with Z
/// on the measured qubit; measured and reset qubits then absorb their error
/// component. The residual is reported on the data qubits.
PropagationResult propagate(const Circuit& circuit, const CodeLayout& layout,
                            const FaultSite& site);

/// Classifies a propagated fault. Detection looks at check-bit flips (plus
/// the reconstructed S_Z parity for final-measurement circuits); the
/// residual class is judged against the stabilizer group, against the full
/// stabilizer group of the prepared state for initialisation circuits, and
/// against the decoded logical values for final-measurement circuits.
Classification classify(const Circuit& circuit, const CodeLayout& layout,
                        const PropagationResult& prop);

FaultReport verify(const Circuit& circuit, const CodeLayout& layout,
                   bool keep_records = false);

std::string format_fault_table(const FaultReport& report);

}  // namespace iceberg
