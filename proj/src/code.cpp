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

#include "iceberg/code.hpp"

#include <bit>
#include <cmath>

namespace iceberg {

std::pair<PauliString, PauliString> stabilizers(const CodeLayout& layout) {
  PauliString sx(layout.n());
  PauliString sz(layout.n());
  for (int q = 0; q < layout.n(); ++q) {
    sx.set(q, Pauli::X);
    sz.set(q, Pauli::Z);
  }
  return {sx, sz};
}

namespace {

PauliString all_letter_except(int k, Pauli p, int skip) {
  PauliString s(k);
  for (int q = 0; q < k; ++q)
    if (q != skip) s.set(q, p);
  return s;
}

}  // namespace

LogicalPauli logical_from_physical_pair(const CodeLayout& layout, Pauli basis,
                                        int i, int j) {
  const int n = layout.n();
  if (i < 0 || i >= n || j < 0 || j >= n || i == j)
    throw std::invalid_argument("invalid physical qubit pair");
  if (basis == Pauli::I)
    throw std::invalid_argument("pair basis must be X, Y or Z");

  const int t = layout.t(), b = layout.b(), k = layout.k;
  const bool has_t = i == t || j == t;
  const bool has_b = i == b || j == b;
  const int m = has_t ? (i == t ? j : i) : (i == b ? j : i);  // numbered qubit

  LogicalPauli out{PauliString(k), 1};
  switch (basis) {
    case Pauli::X:
      if (has_t && has_b) {
        out.op = all_letter_except(k, Pauli::X, -1);
      } else if (has_t) {
        out.op.set(m, Pauli::X);
      } else if (has_b) {
        out.op = all_letter_except(k, Pauli::X, m);
      } else {
        out.op.set(i, Pauli::X);
        out.op.set(j, Pauli::X);
      }
      break;
    case Pauli::Z:
      if (has_t && has_b) {
        out.op = all_letter_except(k, Pauli::Z, -1);
      } else if (has_b) {
        out.op.set(m, Pauli::Z);
      } else if (has_t) {
        out.op = all_letter_except(k, Pauli::Z, m);
      } else {
        out.op.set(i, Pauli::Z);
        out.op.set(j, Pauli::Z);
      }
      break;
    case Pauli::Y:
      if (has_t && has_b) {
        out.op = all_letter_except(k, Pauli::Y, -1);
        out.sign = (k / 2) % 2 == 0 ? -1 : 1;  // (-1)^(1 + k/2)
      } else if (has_t) {
        out.op = all_letter_except(k, Pauli::Z, m);
        out.op.set(m, Pauli::X);
        out.sign = -1;
      } else if (has_b) {
        out.op = all_letter_except(k, Pauli::X, m);
        out.op.set(m, Pauli::Z);
        out.sign = -1;
      } else {
        out.op.set(i, Pauli::Y);
        out.op.set(j, Pauli::Y);
      }
      break;
    default:
      break;
  }
  return out;
}

PhysicalPair physical_from_logical(const CodeLayout& layout,
                                   const LogicalPauli& logical) {
  const int k = layout.k;
  const PauliString& op = logical.op;
  if (op.n_qubits() != k)
    throw std::invalid_argument("logical operator acts on the wrong register");
  if (op.prefix_exp() != 0)
    throw std::invalid_argument(
        "logical operator must carry a plain + prefix; use the sign field");

  int nx = 0, ny = 0, nz = 0;
  int x_pos = -1, y_pos = -1, z_pos = -1;
  int first = -1, second = -1;
  for (int q = 0; q < k; ++q) {
    Pauli p = op.at(q);
    if (p == Pauli::I) continue;
    if (first < 0)
      first = q;
    else if (second < 0)
      second = q;
    if (p == Pauli::X) ++nx, x_pos = q;
    if (p == Pauli::Y) ++ny, y_pos = q;
    if (p == Pauli::Z) ++nz, z_pos = q;
  }
  const int w = nx + ny + nz;
  const int s = logical.sign;
  const int t = layout.t(), b = layout.b();

  if (w == 1 && nx == 1) return {Pauli::X, t, x_pos, s};
  if (w == 1 && nz == 1) return {Pauli::Z, b, z_pos, s};
  if (w == 2 && nx == 2) return {Pauli::X, first, second, s};
  if (w == 2 && ny == 2) return {Pauli::Y, first, second, s};
  if (w == 2 && nz == 2) return {Pauli::Z, first, second, s};
  if (w == k && nx == k) return {Pauli::X, t, b, s};
  if (w == k && nz == k) return {Pauli::Z, t, b, s};
  if (w == k && ny == k) {
    int fam = (k / 2) % 2 == 0 ? -1 : 1;
    return {Pauli::Y, t, b, fam * s};
  }
  if (w == k - 1 && nx == k - 1) {
    int missing = -1;
    for (int q = 0; q < k; ++q)
      if (op.at(q) == Pauli::I) missing = q;
    return {Pauli::X, b, missing, s};
  }
  if (w == k - 1 && nz == k - 1) {
    int missing = -1;
    for (int q = 0; q < k; ++q)
      if (op.at(q) == Pauli::I) missing = q;
    return {Pauli::Z, t, missing, s};
  }
  if (w == k && nx == 1 && nz == k - 1) return {Pauli::Y, t, x_pos, -s};
  if (w == k && nz == 1 && nx == k - 1) return {Pauli::Y, b, z_pos, -s};

  throw NotCompilableError(
      "logical operator has no two-qubit physical form: " + op.str());
}

bool is_two_qubit_compilable(const CodeLayout& layout,
                             const PauliString& logical_op) {
  try {
    physical_from_logical(layout, LogicalPauli{logical_op, 1});
    return true;
  } catch (const NotCompilableError&) {
    return false;
  }
}

Readout decode_readout(const CodeLayout& layout,
                       const std::vector<uint8_t>& bits) {
  if (static_cast<int>(bits.size()) != layout.n())
    throw std::invalid_argument("readout must cover exactly the data qubits");
  int parity = 0;
  for (uint8_t v : bits) parity ^= (v & 1);
  Readout r;
  r.s_z = parity ? -1 : 1;
  r.logical_z.resize(layout.k);
  for (int i = 0; i < layout.k; ++i)
    r.logical_z[i] = ((bits[i] ^ bits[layout.b()]) & 1) ? -1 : 1;
  return r;
}

PauliString embed_logical(const CodeLayout& layout,
                          const PauliString& logical_op) {
  if (logical_op.n_qubits() != layout.k)
    throw std::invalid_argument("logical operator acts on the wrong register");
  const int n = layout.n();
  PauliString out(n);
  for (int q = 0; q < layout.k; ++q) {
    switch (logical_op.at(q)) {
      case Pauli::I: break;
      case Pauli::X: {
        PauliString f(n);
        f.set(q, Pauli::X);
        f.set(layout.t(), Pauli::X);
        out *= f;
        break;
      }
      case Pauli::Z: {
        PauliString f(n);
        f.set(q, Pauli::Z);
        f.set(layout.b(), Pauli::Z);
        out *= f;
        break;
      }
      case Pauli::Y: {
        PauliString f(n);
        f.set(q, Pauli::Y);
        f.set(layout.t(), Pauli::X);
        f.set(layout.b(), Pauli::Z);
        out *= f;
        break;
      }
    }
  }
  // Carry the input prefix through.
  out.set_phase_exp(out.phase_exp() + logical_op.prefix_exp());
  return out;
}

Eigen::MatrixXcd encoding_isometry(const CodeLayout& layout) {
  const int k = layout.k, n = layout.n();
  const uint64_t rows = uint64_t{1} << n;
  const uint64_t cols = uint64_t{1} << k;
  const double a = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows),
                                              static_cast<Eigen::Index>(cols));
  const uint64_t data_mask = cols - 1;
  for (uint64_t v = 0; v < cols; ++v) {
    int p = std::popcount(v) & 1;
    uint64_t branch0 = v | (static_cast<uint64_t>(p) << k);
    uint64_t branch1 = (~v & data_mask) | (static_cast<uint64_t>(1 - p) << k) |
                       (uint64_t{1} << (k + 1));
    e(static_cast<Eigen::Index>(branch0), static_cast<Eigen::Index>(v)) = a;
    e(static_cast<Eigen::Index>(branch1), static_cast<Eigen::Index>(v)) = a;
  }
  return e;
}

}  // namespace iceberg
