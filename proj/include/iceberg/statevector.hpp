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
#include <complex>
#include <cstdint>
#include <vector>

#include "iceberg/circuit.hpp"
#include "iceberg/pauli.hpp"

namespace iceberg {

/// Dense statevector over n qubits. Basis index bit q holds the value of
/// qubit q (qubit 0 is the least significant bit).
class StateVector {
 public:
  static constexpr int kDefaultMaxQubits = 22;

  explicit StateVector(int n_qubits, int max_qubits = kDefaultMaxQubits);

  int n_qubits() const { return n_; }
  uint64_t dim() const { return uint64_t{1} << n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amp_; }
  std::complex<double>& amp(uint64_t i) { return amp_[i]; }
  const std::complex<double>& amp(uint64_t i) const { return amp_[i]; }

  void set_basis_state(uint64_t index);

  void apply_h(int q);
  void apply_s(int q);
  void apply_sdg(int q);
  void apply_x(int q);
  void apply_z(int q);
  void apply_rz(int q, double theta);
  void apply_rx(int q, double theta);
  void apply_cnot(int control, int target);
  void apply_ms(int a, int b, double theta);
  void apply_pauli(int q, Pauli p);
  void apply_pauli(const PauliString& p);
  void apply_unitary1(int q, const Eigen::Matrix2cd& u);
  /// Applies a 4x4 unitary; the local index is bit(a) + 2 * bit(b).
  void apply_unitary2(int a, int b, const Eigen::Matrix4cd& u);

  /// Applies one unitary instruction (Reset/MeasureZ are rejected).
  void apply(const Instruction& instr);

  double prob_one(int q) const;
  /// Projects qubit q onto |outcome>, without renormalizing.
  void project(int q, int outcome);
  double norm_sqr() const;
  void renormalize();

  Eigen::VectorXcd to_eigen() const;

 private:
  void check_qubit(int q) const;

  int n_ = 0;
  std::vector<std::complex<double>> amp_;
};

}  // namespace iceberg
