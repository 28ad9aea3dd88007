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

#include <stdexcept>

#include "iceberg/circuit.hpp"
#include "iceberg/statevector.hpp"

namespace iceberg {

Eigen::MatrixXcd unitary_of(const Circuit& c) {
  constexpr int kMaxQubits = 12;
  if (c.n_qubits > kMaxQubits)
    throw std::invalid_argument("circuit too large for a dense unitary");
  for (const auto& instr : c.instructions)
    if (instr.op == Op::Reset || instr.op == Op::MeasureZ)
      throw std::invalid_argument(
          "unitary_of requires a measurement-free circuit");
  const uint64_t dim = uint64_t{1} << c.n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (uint64_t col = 0; col < dim; ++col) {
    StateVector sv(c.n_qubits, kMaxQubits);
    sv.set_basis_state(col);
    for (const auto& instr : c.instructions) sv.apply(instr);
    for (uint64_t row = 0; row < dim; ++row)
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          sv.amp(row);
  }
  return u;
}

}  // namespace iceberg
