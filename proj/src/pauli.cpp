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

#include "iceberg/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace iceberg {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw std::invalid_argument("invalid Pauli letter");
  }
}

PauliString::PauliString(int n_qubits) : n_(n_qubits) {
  if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
  size_t words = (static_cast<size_t>(n_qubits) + 63) / 64;
  xw_.assign(words, 0);
  zw_.assign(words, 0);
}

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
  PauliString s(n_qubits);
  s.set(qubit, p);
  return s;
}

void PauliString::check_qubit(int q) const {
  if (q < 0 || q >= n_) throw std::out_of_range("qubit index out of range");
}

Pauli PauliString::at(int q) const {
  check_qubit(q);
  bool x = x_bit(q), z = z_bit(q);
  if (x && z) return Pauli::Y;
  if (x) return Pauli::X;
  if (z) return Pauli::Z;
  return Pauli::I;
}

void PauliString::set(int q, Pauli p) {
  check_qubit(q);
  int old_y = at(q) == Pauli::Y ? 1 : 0;
  bool x = p == Pauli::X || p == Pauli::Y;
  bool z = p == Pauli::Z || p == Pauli::Y;
  set_bit(xw_, q, x);
  set_bit(zw_, q, z);
  int new_y = p == Pauli::Y ? 1 : 0;
  // Keep the displayed prefix stable: the prefix is phase_exp minus the
  // number of Y letters, mod 4.
  phase_ = (phase_ + new_y - old_y + 4) % 4;
}

int PauliString::weight() const {
  int w = 0;
  for (size_t i = 0; i < xw_.size(); ++i)
    w += std::popcount(xw_[i] | zw_[i]);
  return w;
}

int PauliString::prefix_exp() const {
  int ny = 0;
  for (size_t i = 0; i < xw_.size(); ++i)
    ny += std::popcount(xw_[i] & zw_[i]);
  return ((phase_ - ny) % 4 + 4) % 4;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.n_ != n_)
    throw std::invalid_argument("PauliString size mismatch in product");
  // X^a Z^b * X^c Z^d = (-1)^(b&c) X^(a^c) Z^(b^d), per qubit.
  int cross = 0;
  for (size_t i = 0; i < xw_.size(); ++i)
    cross += std::popcount(zw_[i] & rhs.xw_[i]);
  phase_ = (phase_ + rhs.phase_ + 2 * cross) % 4;
  for (size_t i = 0; i < xw_.size(); ++i) {
    xw_[i] ^= rhs.xw_[i];
    zw_[i] ^= rhs.zw_[i];
  }
  return *this;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.n_ != n_)
    throw std::invalid_argument("PauliString size mismatch in commutator");
  int sym = 0;
  for (size_t i = 0; i < xw_.size(); ++i)
    sym += std::popcount(xw_[i] & other.zw_[i]) +
           std::popcount(zw_[i] & other.xw_[i]);
  return sym % 2 == 0;
}

bool PauliString::equal_letters(const PauliString& other) const {
  return n_ == other.n_ && xw_ == other.xw_ && zw_ == other.zw_;
}

std::string PauliString::str() const {
  static const char* prefixes[4] = {"+", "+i", "-", "-i"};
  std::string out = prefixes[prefix_exp()];
  out.reserve(out.size() + static_cast<size_t>(n_));
  for (int q = 0; q < n_; ++q) out.push_back(pauli_char(at(q)));
  return out;
}

PauliString PauliString::parse(std::string_view text) {
  size_t pos = 0;
  int prefix = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    prefix = 1;
    ++pos;
  }
  if (negative) prefix = (prefix + 2) % 4;
  PauliString s(static_cast<int>(text.size() - pos));
  for (int q = 0; pos < text.size(); ++pos, ++q)
    s.set(q, pauli_from_char(text[pos]));
  // set() keeps the prefix at "+"; shift it.
  s.phase_ = (s.phase_ + prefix) % 4;
  return s;
}

void PauliString::conj_h(int q) {
  check_qubit(q);
  bool x = x_bit(q), z = z_bit(q);
  // X -> Z, Z -> X; reordering Z^x X^z into normal form costs (-1)^(x&z).
  if (x && z) phase_ = (phase_ + 2) % 4;
  set_bit(xw_, q, z);
  set_bit(zw_, q, x);
}

void PauliString::conj_s(int q) {
  check_qubit(q);
  bool x = x_bit(q), z = z_bit(q);
  // X -> i X Z, Z -> Z.
  if (x) {
    phase_ = (phase_ + 1) % 4;
    set_bit(zw_, q, !z);
  }
}

void PauliString::conj_sdg(int q) {
  check_qubit(q);
  bool x = x_bit(q), z = z_bit(q);
  if (x) {
    phase_ = (phase_ + 3) % 4;
    set_bit(zw_, q, !z);
  }
}

void PauliString::conj_x(int q) {
  check_qubit(q);
  if (z_bit(q)) phase_ = (phase_ + 2) % 4;
}

void PauliString::conj_cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target)
    throw std::invalid_argument("CNOT qubits must be distinct");
  bool xc = x_bit(control), zc = z_bit(control);
  bool xt = x_bit(target), zt = z_bit(target);
  // X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c fixed; no phase is picked up.
  set_bit(zw_, control, zc ^ zt);
  set_bit(xw_, target, xt ^ xc);
}

void PauliString::conj_ms(int a, int b, double theta) {
  check_qubit(a);
  check_qubit(b);
  double steps = theta / (M_PI / 2.0);
  long m = std::lround(steps);
  if (std::abs(steps - static_cast<double>(m)) > 1e-9)
    throw std::invalid_argument(
        "MS angle is not a multiple of pi/2; not a Clifford gate");
  int mm = static_cast<int>(((m % 4) + 4) % 4);
  if (mm == 0) return;
  bool anti = x_bit(a) ^ x_bit(b);
  if (!anti) return;
  // U P U^dag = P exp(i theta Z_a Z_b) when P anticommutes with Z_a Z_b.
  phase_ = (phase_ + mm) % 4;
  if (mm % 2 == 1) {
    set_bit(zw_, a, !z_bit(a));
    set_bit(zw_, b, !z_bit(b));
  }
}

void PauliString::clear_qubit(int q) {
  check_qubit(q);
  int old_y = at(q) == Pauli::Y ? 1 : 0;
  set_bit(xw_, q, false);
  set_bit(zw_, q, false);
  phase_ = (phase_ - old_y + 4) % 4;
}

PauliString PauliString::restricted(int m) const {
  if (m < 0 || m > n_) throw std::out_of_range("bad restriction size");
  PauliString out(m);
  for (int q = 0; q < m; ++q) out.set(q, at(q));
  return out;
}

}  // namespace iceberg
