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

#include "iceberg/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace iceberg {

namespace {
constexpr std::complex<double> kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

StateVector::StateVector(int n_qubits, int max_qubits) : n_(n_qubits) {
  if (n_qubits < 1) throw std::invalid_argument("need at least one qubit");
  if (n_qubits > max_qubits)
    throw std::invalid_argument("statevector exceeds the qubit limit");
  amp_.assign(uint64_t{1} << n_qubits, {0.0, 0.0});
  amp_[0] = 1.0;
}

void StateVector::check_qubit(int q) const {
  if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
}

void StateVector::set_basis_state(uint64_t index) {
  if (index >= dim()) throw std::out_of_range("basis index out of range");
  std::fill(amp_.begin(), amp_.end(), std::complex<double>{0.0, 0.0});
  amp_[index] = 1.0;
}

void StateVector::apply_h(int q) {
  check_qubit(q);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) {
      auto a0 = amp_[i];
      auto a1 = amp_[i + step];
      amp_[i] = kInvSqrt2 * (a0 + a1);
      amp_[i + step] = kInvSqrt2 * (a0 - a1);
    }
}

void StateVector::apply_s(int q) {
  check_qubit(q);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) amp_[i + step] *= kI;
}

void StateVector::apply_sdg(int q) {
  check_qubit(q);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) amp_[i + step] *= -kI;
}

void StateVector::apply_x(int q) {
  check_qubit(q);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i)
      std::swap(amp_[i], amp_[i + step]);
}

void StateVector::apply_z(int q) {
  check_qubit(q);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) amp_[i + step] *= -1.0;
}

void StateVector::apply_rz(int q, double theta) {
  check_qubit(q);
  const auto p0 = std::exp(-kI * (theta / 2.0));
  const auto p1 = std::exp(kI * (theta / 2.0));
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) {
      amp_[i] *= p0;
      amp_[i + step] *= p1;
    }
}

void StateVector::apply_rx(int q, double theta) {
  check_qubit(q);
  const double c = std::cos(theta / 2.0);
  const std::complex<double> s = -kI * std::sin(theta / 2.0);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) {
      auto a0 = amp_[i];
      auto a1 = amp_[i + step];
      amp_[i] = c * a0 + s * a1;
      amp_[i + step] = s * a0 + c * a1;
    }
}

void StateVector::apply_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  const uint64_t cm = uint64_t{1} << control;
  const uint64_t tm = uint64_t{1} << target;
  for (uint64_t i = 0; i < dim(); ++i)
    if ((i & cm) && !(i & tm)) std::swap(amp_[i], amp_[i | tm]);
}

void StateVector::apply_ms(int a, int b, double theta) {
  check_qubit(a);
  check_qubit(b);
  // exp(-i theta Z_a Z_b / 2) is diagonal.
  const auto even = std::exp(-kI * (theta / 2.0));
  const auto odd = std::exp(kI * (theta / 2.0));
  const uint64_t am = uint64_t{1} << a;
  const uint64_t bm = uint64_t{1} << b;
  for (uint64_t i = 0; i < dim(); ++i)
    amp_[i] *= (((i & am) != 0) == ((i & bm) != 0)) ? even : odd;
}

void StateVector::apply_pauli(int q, Pauli p) {
  switch (p) {
    case Pauli::I: return;
    case Pauli::X: apply_x(q); return;
    case Pauli::Z: apply_z(q); return;
    case Pauli::Y: {
      const uint64_t step = uint64_t{1} << q;
      for (uint64_t base = 0; base < dim(); base += 2 * step)
        for (uint64_t i = base; i < base + step; ++i) {
          auto a0 = amp_[i];
          auto a1 = amp_[i + step];
          amp_[i] = -kI * a1;
          amp_[i + step] = kI * a0;
        }
      return;
    }
  }
}

void StateVector::apply_pauli(const PauliString& p) {
  if (p.n_qubits() != n_)
    throw std::invalid_argument("PauliString size does not match state");
  for (int q = 0; q < n_; ++q) apply_pauli(q, p.at(q));
  int e = p.prefix_exp();
  if (e != 0) {
    std::complex<double> ph = std::pow(kI, e);
    for (auto& a : amp_) a *= ph;
  }
}

void StateVector::apply_unitary1(int q, const Eigen::Matrix2cd& u) {
  check_qubit(q);
  const uint64_t step = uint64_t{1} << q;
  for (uint64_t base = 0; base < dim(); base += 2 * step)
    for (uint64_t i = base; i < base + step; ++i) {
      auto a0 = amp_[i];
      auto a1 = amp_[i + step];
      amp_[i] = u(0, 0) * a0 + u(0, 1) * a1;
      amp_[i + step] = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

void StateVector::apply_unitary2(int a, int b, const Eigen::Matrix4cd& u) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) throw std::invalid_argument("two-qubit unitary needs distinct qubits");
  const uint64_t am = uint64_t{1} << a;
  const uint64_t bm = uint64_t{1} << b;
  for (uint64_t i = 0; i < dim(); ++i) {
    if (i & (am | bm)) continue;  // visit each 4-amplitude block once
    uint64_t idx[4] = {i, i | am, i | bm, i | am | bm};
    std::complex<double> v[4];
    for (int r = 0; r < 4; ++r) v[r] = amp_[idx[r]];
    for (int r = 0; r < 4; ++r) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += u(r, c) * v[c];
      amp_[idx[r]] = acc;
    }
  }
}

void StateVector::apply(const Instruction& instr) {
  switch (instr.op) {
    case Op::H: apply_h(instr.q0); return;
    case Op::S: apply_s(instr.q0); return;
    case Op::Sdg: apply_sdg(instr.q0); return;
    case Op::X: apply_x(instr.q0); return;
    case Op::Rz: apply_rz(instr.q0, instr.theta); return;
    case Op::Rx: apply_rx(instr.q0, instr.theta); return;
    case Op::Cnot: apply_cnot(instr.q0, instr.q1); return;
    case Op::Ms: apply_ms(instr.q0, instr.q1, instr.theta); return;
    case Op::Reset:
    case Op::MeasureZ:
      throw std::invalid_argument("non-unitary instruction");
  }
}

double StateVector::prob_one(int q) const {
  check_qubit(q);
  const uint64_t qm = uint64_t{1} << q;
  double p = 0.0;
  for (uint64_t i = 0; i < dim(); ++i)
    if (i & qm) p += std::norm(amp_[i]);
  return p;
}

void StateVector::project(int q, int outcome) {
  check_qubit(q);
  const uint64_t qm = uint64_t{1} << q;
  for (uint64_t i = 0; i < dim(); ++i)
    if (((i & qm) != 0) != (outcome != 0)) amp_[i] = 0.0;
}

double StateVector::norm_sqr() const {
  double p = 0.0;
  for (const auto& a : amp_) p += std::norm(a);
  return p;
}

void StateVector::renormalize() {
  double n2 = norm_sqr();
  if (n2 <= 0.0) throw std::runtime_error("cannot renormalize a null state");
  double s = 1.0 / std::sqrt(n2);
  for (auto& a : amp_) a *= s;
}

Eigen::VectorXcd StateVector::to_eigen() const {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(dim()));
  for (uint64_t i = 0; i < dim(); ++i) v(static_cast<Eigen::Index>(i)) = amp_[i];
  return v;
}

}  // namespace iceberg
