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
#include <stdexcept>
#include <vector>

#include "iceberg/pauli.hpp"

namespace iceberg {

/// One instance of the [[k+2, k, 2]] error detection code.
///
/// k logical qubits live on n = k + 2 data qubits. Data qubits 0..k-1 carry
/// the numbered labels 1..k; qubit k is "t" and qubit k+1 is "b". Two more
/// ancillas a1 = k+2 and a2 = k+3 are used by the check circuits, for a
/// total budget of k + 4 qubits.
struct CodeLayout {
  int k;

  explicit CodeLayout(int k_logical) : k(k_logical) {
    if (k < 2 || k % 2 != 0)
      throw std::invalid_argument(
          "the code needs an even number of logical qubits, k >= 2");
  }

  int n() const { return k + 2; }
  int t() const { return k; }
  int b() const { return k + 1; }
  int a1() const { return k + 2; }
  int a2() const { return k + 3; }
  int total_qubits() const { return k + 4; }
  bool is_data(int q) const { return q >= 0 && q < n(); }
};

/// A Pauli operator on the logical register, together with the sign that
/// relates it to its two-qubit physical form.
struct LogicalPauli {
  PauliString op;  // k qubits, displayed prefix "+"
  int sign = 1;    // +1 or -1

  bool operator==(const LogicalPauli&) const = default;
};

/// S_X = X⊗...⊗X and S_Z = Z⊗...⊗Z on the n data qubits.
std::pair<PauliString, PauliString> stabilizers(const CodeLayout& layout);

/// Maps the two-qubit physical operator sigma_i sigma_j to the logical
/// operator L and sign s with sigma_i sigma_j = s * L on the code space.
LogicalPauli logical_from_physical_pair(const CodeLayout& layout, Pauli basis,
                                        int i, int j);

struct PhysicalPair {
  Pauli basis;
  int i;
  int j;
  int sign;
};

struct NotCompilableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Inverse of logical_from_physical_pair. Throws NotCompilableError when the
/// logical operator has no two-qubit physical form; callers must decompose
/// such rotations further.
PhysicalPair physical_from_logical(const CodeLayout& layout,
                                   const LogicalPauli& logical);

bool is_two_qubit_compilable(const CodeLayout& layout,
                             const PauliString& logical_op);

struct Readout {
  int s_z;                     // +1 or -1
  std::vector<int> logical_z;  // k entries, each +1 or -1
};

/// Decodes a destructive Z-basis readout of the n data qubits.
Readout decode_readout(const CodeLayout& layout,
                       const std::vector<uint8_t>& bits);

/// Embeds a logical operator into its n-qubit physical representative using
/// the defining generators X_i X_t and Z_i Z_b (exact phases included).
PauliString embed_logical(const CodeLayout& layout, const PauliString& logical_op);

/// The 2^n x 2^k encoding isometry. Column v is the code state whose
/// logical Z readout is the bitstring v (qubit 0 = least significant bit).
Eigen::MatrixXcd encoding_isometry(const CodeLayout& layout);

}  // namespace iceberg
