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

#include <optional>
#include <vector>

#include "iceberg/circuit.hpp"
#include "iceberg/code.hpp"

namespace iceberg {

/// Per-data-qubit CNOT ordering inside a syndrome block. Order A couples the
/// data qubit to the X-syndrome ancilla first (CNOT a2->q, then CNOT q->a1);
/// order B reverses the two.
enum class BlockOrder : uint8_t { A, B };

/// The concrete instance of the check-circuit construction. The default
/// values are the instance selected by find_ft_template: an A B B ... B A
/// syndrome round, an initialisation parity check on the first and last
/// qubits of the preparation ladder, and flag couplings on both sides of the
/// final stabilizer extraction.
struct FtTemplate {
  BlockOrder first_block = BlockOrder::A;
  BlockOrder middle_block = BlockOrder::B;
  BlockOrder last_block = BlockOrder::A;
  // Positions in the ladder order whose parity the init check measures;
  // negative values count from the end.
  int init_check_a = 0;
  int init_check_b = -1;
  bool final_leading_flag = true;
  bool final_trailing_flag = true;

  bool operator==(const FtTemplate&) const = default;
};

/// Prepares the logical all-zeros state (a GHZ state on the data qubits)
/// with a single-ancilla parity check. Uses data qubits plus a1 only.
Circuit build_init(const CodeLayout& layout, const FtTemplate& tmpl = {},
                   int round = -1);

/// Measures S_X into a2 and S_Z into a1 without disturbing the code space.
Circuit build_syndrome(const CodeLayout& layout, const FtTemplate& tmpl = {},
                       int round = -1);

/// Flagged extraction of S_X into a2 (a1 is the flag), then a destructive
/// Z-basis measurement of every data qubit.
Circuit build_final(const CodeLayout& layout, const FtTemplate& tmpl = {},
                    int round = -1);

/// The searchable template space (small by construction).
std::vector<FtTemplate> enumerate_templates();

/// Searches the template space for the first instance whose three circuits
/// all verify with zero undetected logical faults for every even k up to
/// k_max. Returns nothing when the space contains no such instance.
std::optional<FtTemplate> find_ft_template(int k_max = 16);

}  // namespace iceberg
